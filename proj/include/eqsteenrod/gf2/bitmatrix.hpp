#pragma once

// GF(2) matrices: a sparse assembly form (sorted column lists per row) and
// a dense bit-packed form for elimination. Row operations go through the
// active word kernels.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eqsteenrod/gf2/kernels.hpp"

namespace eqsteenrod::gf2 {

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    bool is_zero() const;
    std::size_t popcount() const;

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const;
    /// In-place row reduction to echelon form; returns the rank.
    std::size_t reduce(const Kernels& k = active_kernels());

    /// a * b over GF(2); a.cols() must equal b.rows().
    friend BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Row-major sparse matrix with sorted, duplicate-free column lists.
/// Adding an existing entry cancels it (characteristic 2).
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    void add(std::size_t r, std::size_t c);
    std::span<const std::uint32_t> row(std::size_t r) const { return rows_data_[r]; }

    BitMatrix to_dense() const;
    std::size_t rank() const { return to_dense().rank(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<std::uint32_t>> rows_data_;
};

}  // namespace eqsteenrod::gf2
