#pragma once

// Wedge decomposition of the relative dual Steenrod algebra into induced
// representation spheres G_+ ^_{H_f} S^{||f||}, one per orbit [f] of
// finitely supported sequences of equivariant functions.

#include <cstdint>
#include <map>
#include <vector>

#include "eqsteenrod/eqfun.hpp"
#include "eqsteenrod/rep_ring.hpp"
#include "eqsteenrod/series.hpp"

namespace eqsteenrod {

/// Which generator degrees feed the sequence slots, and whether the mod-2
/// exterior class of degree 1 is present.
struct GeneratorProfile {
    DegreeList degrees = DegreeList::mu();
    bool mod2 = false;
    /// Highest slot used; 0 means every slot that fits under the cutoff.
    int max_index = 0;

    static GeneratorProfile mu(bool mod2 = false, int max_index = 0) { return {DegreeList::mu(), mod2, max_index}; }
    static GeneratorProfile bp(bool mod2 = false, int max_index = 0) { return {DegreeList::bp(), mod2, max_index}; }

    /// d_1, d_2, ... for the slots whose single-coset dimension 2 d_i + 1
    /// fits under `cutoff`.
    std::vector<std::int64_t> materialize(std::int64_t cutoff) const;
};

struct Summand {
    EqFnSeq seq;  ///< provenance
    Subgroup stab;
    InducedDegree degree;
    std::int64_t orbit_size;
    std::int64_t underlying_dim;
    bool tau0 = false;  ///< multiplied by the mod-2 degree-1 class
};

/// Builds the summand for an orbit representative. With `tau0` the degree
/// gains one trivial summand.
Summand make_summand(const EqFnSeq& representative, const DegreeList& degrees, bool tau0 = false);

/// Canonical order: underlying dimension, then sequence length, then
/// lexicographic sequence, then without-before-with the mod-2 class.
bool canonical_less(const Summand& x, const Summand& y);

/// Summands of N_{C_2}^G(S^{i rho_2 + 1} v S^0): one per orbit of
/// functions, placed in slot i. Requires 1 <= n <= 4.
std::vector<Summand> norm_summands(int n, int i);

/// Every orbit [f] of sequences with underlying dimension <= cutoff, in
/// canonical order. With profile.mod2 each summand also appears times the
/// degree-1 class.
std::vector<Summand> basis_up_to(int n, const GeneratorProfile& profile, std::int64_t cutoff);

/// sum over summands of orbit_size * t^{underlying_dim}.
PoincareSeries orbit_weighted_series(const std::vector<Summand>& summands, int cutoff);

/// prod_i (1 + t^{2 d_i + 1})^{2^{n-1}}, times (1 + t) for mod 2, truncated.
PoincareSeries expected_basis_series(int n, const GeneratorProfile& profile, int cutoff);

/// True when the norm_summands series equals (1 + t^{2i+1})^{2^{n-1}}.
bool tensor_expansion_check(int n, int i);

struct CellKey {
    std::int64_t underlying_dim;
    int induced_from;  ///< exponent of H_f
    /// fixed_dim of ||f|| at C_1, C_2, ..., H_f. Levels above H_f are not
    /// reported: the cell is induced from H_f.
    std::vector<std::int64_t> fixed_dims;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellTable {
    std::map<CellKey, std::int64_t> rows;

    std::int64_t total() const;
    bool empty() const { return rows.empty(); }
};

CellTable cell_table(const std::vector<Summand>& summands);

}  // namespace eqsteenrod
