#pragma once

// Koszul model for Tor over F_2[rbar_1, ...] of F_2[mbar_1, ...], the ring
// map sending rbar_i to its Hurewicz image (mbar_i or zero):
//
//   C = F_2[mbar_i] (x) Lambda(e_i),   d(e_i) = hurewicz(rbar_i),
//
// with e_i in homological degree 1 and internal degree |rbar_i|. Homology
// is computed per bidegree by exact elimination over GF(2).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsteenrod/gf2/bitmatrix.hpp"

namespace eqsteenrod {

/// c + s*sigma in RO(C_2).
struct ROC2Degree {
    std::int64_t c = 0;
    std::int64_t s = 0;

    static ROC2Degree rho_multiple(std::int64_t i) { return {i, i}; }

    std::int64_t dim() const { return c + s; }
    ROC2Degree& operator+=(const ROC2Degree& o) {
        c += o.c;
        s += o.s;
        return *this;
    }
    friend ROC2Degree operator+(ROC2Degree a, const ROC2Degree& b) { return a += b; }
    friend ROC2Degree operator-(const ROC2Degree& a, const ROC2Degree& b) { return {a.c - b.c, a.s - b.s}; }
    friend ROC2Degree operator*(std::int64_t k, const ROC2Degree& a) { return {k * a.c, k * a.s}; }
    friend auto operator<=>(const ROC2Degree&, const ROC2Degree&) = default;

    std::string to_string() const;
};

/// True for i = 2^k - 1.
bool is_mersenne(std::int64_t i);

struct PolyGenerator {
    int index;
    ROC2Degree r_degree;  ///< |rbar_i| = i rho_2
    ROC2Degree m_degree;  ///< |mbar_i| = i rho_2
    bool hurewicz_nonzero;  ///< rbar_i -> mbar_i, else rbar_i -> 0
};

class PolyGenerators {
public:
    /// Indices 1..n with rbar_i -> mbar_i except rbar_{2^k-1} -> 0.
    static PolyGenerators standard(int n);
    /// Indices 1..n with every rbar_i -> mbar_i.
    static PolyGenerators all_nonzero(int n);
    /// Only the listed indices, standard Hurewicz map.
    static PolyGenerators only(const std::vector<int>& indices);

    explicit PolyGenerators(std::vector<PolyGenerator> gens);

    const std::vector<PolyGenerator>& generators() const { return gens_; }
    PolyGenerators restricted_to(int max_index) const;

private:
    std::vector<PolyGenerator> gens_;
};

class BlowupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Bidegree {
    ROC2Degree internal;
    int homological = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

using BigradedRanks = std::map<Bidegree, std::int64_t>;

/// m^alpha e_S: `exterior` lists generator positions in S (ascending),
/// `exponents` has one entry per generator position.
struct KoszulMonomial {
    std::vector<int> exterior;
    std::vector<int> exponents;

    friend bool operator==(const KoszulMonomial&, const KoszulMonomial&) = default;
};

/// Subset-lex on the exterior part, then graded lex on the polynomial part.
bool monomial_order_less(const KoszulMonomial& x, const KoszulMonomial& y);

class KoszulComplex {
public:
    struct Block {
        std::vector<KoszulMonomial> basis;
        /// d: this block -> (same internal degree, homological - 1); rows
        /// index the target basis, columns this basis. Empty for s = 0.
        gf2::SparseMatrix differential;
    };

    const std::vector<PolyGenerator>& generators() const { return gens_; }
    std::int64_t cutoff() const { return cutoff_; }
    const std::map<Bidegree, Block>& blocks() const { return blocks_; }
    const Block* block(const Bidegree& b) const;

    ROC2Degree internal_degree(const KoszulMonomial& m) const;
    std::string monomial_name(const KoszulMonomial& m) const;

    /// d_{s-1} o d_s = 0 for every block.
    bool differential_squares_to_zero() const;
    /// sum_s (-1)^s dim C_s per internal degree.
    std::map<ROC2Degree, std::int64_t> euler_characteristics() const;

private:
    friend KoszulComplex build_complex(const PolyGenerators&, int, std::int64_t, std::size_t);

    std::vector<PolyGenerator> gens_;
    std::int64_t cutoff_ = 0;
    std::map<Bidegree, Block> blocks_;
};

inline constexpr std::size_t kDefaultMonomialBound = 1'000'000;

/// All monomials of underlying internal dimension <= cutoff in generators
/// of index <= n. Throws BlowupError if a bidegree exceeds `bound`.
KoszulComplex build_complex(const PolyGenerators& gens, int n, std::int64_t cutoff,
                            std::size_t bound = kDefaultMonomialBound);

/// dim ker - dim im per bidegree; zero ranks are omitted.
BigradedRanks homology_ranks(const KoszulComplex& cx);

/// Ranks of F_2[mbar_j] (x) Lambda(e_j) over j = 2^k - 1 <= n, mbar_j at
/// homological 0 and e_j at homological 1, both in internal degree j rho_2.
BigradedRanks expected_ranks(int n, std::int64_t cutoff);

/// sum_s (-1)^s rank per internal degree.
std::map<ROC2Degree, std::int64_t> euler_characteristics(const BigradedRanks& ranks);

/// Total degree: homological degree s adds s to the trivial coordinate.
std::map<ROC2Degree, std::int64_t> collapse_homological(const BigradedRanks& ranks);

}  // namespace eqsteenrod
