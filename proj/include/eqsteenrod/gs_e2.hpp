#pragma once

// E_2-term of the pushout spectral sequence for HF_2 (x) HZ built
// from the slice filtration: the relative homology tensored with the mbar
// polynomial part, each mbar monomial sitting in filtration equal to its
// slice weight. At C_2 over BP_R the relative part is square-free in the
// taubar_i, and the E_2 ranks are compared with the Koszul computation.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eqsteenrod/eqfun.hpp"
#include "eqsteenrod/koszul.hpp"
#include "eqsteenrod/splitting.hpp"

namespace eqsteenrod {

/// sum_i exps[i-1] * 2 d_i: the underlying dimension of the C_2 monomial
/// prod mbar_i^{exps[i-1]} with |mbar_i| = d_i rho_2.
std::int64_t slice_weight(std::span<const std::int64_t> exps, const DegreeList& degrees);

struct E2Entry {
    std::vector<int> tau;              ///< square-free taubar indices, ascending
    std::vector<std::int64_t> m_exps;  ///< exponent of generator i at [i-1]
    ROC2Degree degree;
    std::int64_t weight;  ///< filtration: slice weight of the mbar part

    std::string name() const;  ///< e.g. "m1^2 t1" (m = mbar, t = taubar)
};

struct E2Basis {
    GeneratorProfile profile;
    int tau_floor = 1;
    std::int64_t cutoff = 0;
    std::vector<E2Entry> entries;

    std::map<ROC2Degree, std::int64_t> rank_function() const;
    /// (degree, weight) -> count.
    std::map<std::pair<ROC2Degree, std::int64_t>, std::int64_t> chart() const;
};

/// Square-free taubar monomials (indices >= tau_floor) times mbar monomials
/// over profile.degrees, all of underlying dimension <= cutoff. Sorted by
/// dimension, then degree, then weight, then name.
E2Basis e2_basis(const GeneratorProfile& profile, int tau_floor, std::int64_t cutoff);

struct CollapseResult {
    bool matches_expected = false;  ///< E_2 ranks vs closed-form Koszul ranks
    bool matches_homology = false;  ///< E_2 ranks vs computed Koszul homology
    std::map<ROC2Degree, std::int64_t> e2;
    std::map<ROC2Degree, std::int64_t> expected;
    std::map<ROC2Degree, std::int64_t> homology;

    bool passed() const { return matches_expected && matches_homology; }
};

/// Rank comparison at C_2, BP-style, tau floor 1; cutoff <= 20.
CollapseResult collapse_details(std::int64_t cutoff);
bool collapse_check(std::int64_t cutoff);

struct PermanentCycleAudit {
    int tau_index;
    ROC2Degree tau_degree;
    std::vector<E2Entry> targets;  ///< generators of the possible target family
    bool excluded;
    std::string reason;
};

/// For each taubar_i (i >= 1) of underlying dimension <= cutoff, the E_2
/// generators a differential d_r (r >= 2, stem -1) could hit, with the
/// argument that rules each family out.
std::vector<PermanentCycleAudit> permanent_cycle_report(std::int64_t cutoff);

/// One orbit of the general-n E_2 basis: a relative summand times a
/// monomial in the variables gamma^j mbar_i, up to simultaneous rotation.
struct E2OrbitRecord {
    EqFnSeq seq;
    std::vector<std::vector<std::int64_t>> m_exps;  ///< [slot][coset]
    bool tau0 = false;
    Subgroup stab;
    std::int64_t orbit_size;
    std::int64_t underlying_dim;
    std::int64_t weight;
};

/// Orbit enumeration of pi(HF_2 ^_{Xi_n} HZ)[G.mbar_1, ...] up to the
/// cutoff. Requires 1 <= n <= 4.
std::vector<E2OrbitRecord> e2_basis_general(int n, const GeneratorProfile& profile, std::int64_t cutoff);

}  // namespace eqsteenrod
