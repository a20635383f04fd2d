#pragma once

// Multiplicative bookkeeping at C_2: the carry algebra of the classes
// taubar_i with taubar_i^2 = a_sigma taubar_{i+1}, degree consistency of the
// norm squaring relation, and geometric fixed point series identities.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eqsteenrod/koszul.hpp"
#include "eqsteenrod/series.hpp"
#include "eqsteenrod/splitting.hpp"

namespace eqsteenrod {

/// a_sigma^e * prod taubar_i (square-free) * prod xibar_j^{k_j}.
struct TauMonomial {
    std::int64_t a_sigma_exp = 0;
    /// tau_bits[i] set iff taubar_i is present; no trailing false entries.
    std::vector<bool> tau_bits;
    /// xibar index -> positive exponent.
    std::map<int, std::int64_t> xi_exps;

    static TauMonomial one() { return {}; }
    static TauMonomial tau(int i);
    static TauMonomial xi(int i, std::int64_t exponent = 1);
    static TauMonomial a_sigma(std::int64_t exponent = 1);
    /// Square-free product of the listed taubar indices.
    static TauMonomial taus(const std::vector<int>& indices);

    bool has_tau(int i) const { return i >= 0 && static_cast<std::size_t>(i) < tau_bits.size() && tau_bits[static_cast<std::size_t>(i)]; }
    std::vector<int> tau_indices() const;
    int lowest_tau() const;  ///< -1 when there is no tau factor

    friend bool operator==(const TauMonomial&, const TauMonomial&) = default;
};

/// Binary addition of the tau parts; every carry out of position i turns
/// taubar_i^2 into a_sigma taubar_{i+1}. `index_floor` is 0 for the mod-2
/// family (taubar_0 present) and 1 for the integral family.
TauMonomial tau_multiply(const TauMonomial& x, const TauMonomial& y, int index_floor = 1);

/// |taubar_i| = (2^i - 1) rho_2 + 1, |xibar_i| = (2^i - 1) rho_2, and
/// a_sigma lowers degree by sigma.
ROC2Degree degree_of(const TauMonomial& x);

/// 2 Ind(i rho_2 + 1) = Ind((2i+1) rho_2 + 1) - Ind(sigma) in RO(C_{2^n})
/// for 1 <= i <= i_max, and 2|taubar_i| = |a_sigma taubar_{i+1}| at C_2.
bool relation_degree_check(int n, int i_max);

/// Fixed dimension of ||f|| at G when H_f = G; nullopt for induced summands.
std::optional<std::int64_t> gfp_summand(const Summand& s);

/// prod_{i >= 2} (1 + t^i).
PoincareSeries gfp_exterior_series(int cutoff);
/// 1/(1 - t^{b}) * prod_{odd j >= 3} 1/(1 - t^j).
PoincareSeries gfp_polynomial_series(int cutoff, int b_degree = 2);
/// Compares the two series above (b in degree 2); cutoff <= 64.
bool gfp_poincare_check(int cutoff);

/// Degree of the image of f_i in pi_* MO = F_2[x_2, x_4, ...]: i for even
/// i that is not 2^j - 1, otherwise nullopt.
std::optional<std::int64_t> phi_of_A_map(std::int64_t i);

/// Counts of square-free taubar monomials (indices >= floor) by the fixed
/// dimension of their degree, taubar_i contributing 2^i.
PoincareSeries squarefree_tau_fixed_series(int index_floor, int cutoff);

}  // namespace eqsteenrod
