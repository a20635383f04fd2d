#include "eqsteenrod/gf2/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eqsteenrod::gf2 {

namespace {

// Rows are padded to whole 256-bit blocks so vector kernels see full lanes.
constexpr std::size_t kPadWords = 4;

std::size_t padded_words(std::size_t cols) {
    const std::size_t words = (cols + kWordBits - 1) / kWordBits;
    return (words + kPadWords - 1) / kPadWords * kPadWords;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(padded_words(cols)), data_(rows * stride_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

bool BitMatrix::is_zero() const { return active_kernels().all_zero(data_.data(), data_.size()); }

std::size_t BitMatrix::popcount() const { return active_kernels().popcount(data_.data(), data_.size()); }

std::size_t BitMatrix::rank() const {
    BitMatrix copy(*this);
    return copy.reduce();
}

std::size_t BitMatrix::reduce(const Kernels& k) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c / kWordBits;
        const Word bit = Word{1} << (c % kWordBits);
        std::size_t pivot = rank;
        while (pivot < rows_ && (data_[pivot * stride_ + w] & bit) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank) {
            std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(pivot * stride_),
                             data_.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride_),
                             data_.begin() + static_cast<std::ptrdiff_t>(rank * stride_));
        }
        // Columns left of c are already clear below the pivot row.
        const Word* src = data_.data() + rank * stride_ + w;
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            Word* dst = data_.data() + r * stride_ + w;
            if (*dst & bit) k.xor_into(dst, src, stride_ - w);
        }
        ++rank;
    }
    return rank;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not compose");
    BitMatrix out(a.rows(), b.cols());
    const Kernels& k = active_kernels();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Word* dst = out.data_.data() + r * out.stride_;
        for (std::size_t wi = 0; wi < a.stride_; ++wi) {
            Word word = a.data_[r * a.stride_ + wi];
            while (word != 0) {
                const std::size_t j = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                k.xor_into(dst, b.data_.data() + j * b.stride_, out.stride_);
            }
        }
    }
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), rows_data_(rows) {}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows_data_) total += r.size();
    return total;
}

void SparseMatrix::add(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
    auto& row = rows_data_[r];
    const auto col = static_cast<std::uint32_t>(c);
    auto it = std::ranges::lower_bound(row, col);
    if (it != row.end() && *it == col) row.erase(it);
    else row.insert(it, col);
}

BitMatrix SparseMatrix::to_dense() const {
    BitMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::uint32_t c : rows_data_[r]) m.set(r, c);
    }
    return m;
}

}  // namespace eqsteenrod::gf2
