#include "eqsteenrod/mult_structure.hpp"

#include <stdexcept>

namespace eqsteenrod {

namespace {

constexpr int kMaxTauIndex = 60;

void trim(std::vector<bool>& bits) {
    while (!bits.empty() && !bits.back()) bits.pop_back();
}

void require_floor(const TauMonomial& x, int index_floor) {
    if (index_floor != 0 && index_floor != 1) throw std::invalid_argument("tau index floor must be 0 or 1");
    const int low = x.lowest_tau();
    if (low >= 0 && low < index_floor) throw std::invalid_argument("taubar_0 is not in the integral family");
}

}  // namespace

TauMonomial TauMonomial::tau(int i) { return taus({i}); }

TauMonomial TauMonomial::xi(int i, std::int64_t exponent) {
    if (i < 1 || exponent < 0) throw std::invalid_argument("xibar needs index >= 1 and exponent >= 0");
    TauMonomial m;
    if (exponent > 0) m.xi_exps[i] = exponent;
    return m;
}

TauMonomial TauMonomial::a_sigma(std::int64_t exponent) {
    if (exponent < 0) throw std::invalid_argument("a_sigma exponent must be >= 0");
    TauMonomial m;
    m.a_sigma_exp = exponent;
    return m;
}

TauMonomial TauMonomial::taus(const std::vector<int>& indices) {
    TauMonomial m;
    for (int i : indices) {
        if (i < 0) throw std::invalid_argument("tau index must be >= 0");
        if (static_cast<std::size_t>(i) >= m.tau_bits.size()) m.tau_bits.resize(static_cast<std::size_t>(i) + 1, false);
        if (m.tau_bits[static_cast<std::size_t>(i)]) throw std::invalid_argument("taus() takes distinct indices");
        m.tau_bits[static_cast<std::size_t>(i)] = true;
    }
    return m;
}

std::vector<int> TauMonomial::tau_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < tau_bits.size(); ++i) {
        if (tau_bits[i]) out.push_back(static_cast<int>(i));
    }
    return out;
}

int TauMonomial::lowest_tau() const {
    for (std::size_t i = 0; i < tau_bits.size(); ++i) {
        if (tau_bits[i]) return static_cast<int>(i);
    }
    return -1;
}

TauMonomial tau_multiply(const TauMonomial& x, const TauMonomial& y, int index_floor) {
    require_floor(x, index_floor);
    require_floor(y, index_floor);
    TauMonomial out;
    out.a_sigma_exp = x.a_sigma_exp + y.a_sigma_exp;
    out.xi_exps = x.xi_exps;
    for (const auto& [i, e] : y.xi_exps) out.xi_exps[i] += e;

    const std::size_t width = std::max(x.tau_bits.size(), y.tau_bits.size()) + 1;
    out.tau_bits.assign(width, false);
    int carry = 0;
    for (std::size_t i = 0; i < width; ++i) {
        const int sum = static_cast<int>(i < x.tau_bits.size() && x.tau_bits[i]) +
                        static_cast<int>(i < y.tau_bits.size() && y.tau_bits[i]) + carry;
        out.tau_bits[i] = (sum & 1) != 0;
        carry = sum >> 1;
        out.a_sigma_exp += carry;
    }
    trim(out.tau_bits);
    return out;
}

ROC2Degree degree_of(const TauMonomial& x) {
    ROC2Degree d{0, -x.a_sigma_exp};
    for (int i : x.tau_indices()) {
        if (i > kMaxTauIndex) throw std::overflow_error("tau index too large for 64-bit degrees");
        const std::int64_t p = std::int64_t{1} << i;
        d += ROC2Degree{p, p - 1};
    }
    for (const auto& [i, e] : x.xi_exps) {
        if (i > kMaxTauIndex) throw std::overflow_error("xi index too large for 64-bit degrees");
        d += e * ROC2Degree::rho_multiple((std::int64_t{1} << i) - 1);
    }
    return d;
}

bool relation_degree_check(int n, int i_max) {
    const Subgroup g = Subgroup::whole(n);
    const Subgroup c2 = Subgroup::make(1, n);
    const RealRep sigma = RealRep::sign(c2);
    for (int i = 1; i <= i_max; ++i) {
        const RealRep lhs = 2 * induce(RealRep::trivial(c2, i + 1) + RealRep::sign(c2, i), g);
        const RealRep rhs = induce(RealRep::trivial(c2, 2 * i + 2) + RealRep::sign(c2, 2 * i + 1), g) - induce(sigma, g);
        if (lhs != rhs) return false;
    }
    for (int i = 0; i <= std::min(i_max, kMaxTauIndex - 1); ++i) {
        const TauMonomial t = TauMonomial::tau(i);
        const TauMonomial squared = tau_multiply(t, t, 0);
        if (squared != tau_multiply(TauMonomial::a_sigma(), TauMonomial::tau(i + 1), 0)) return false;
        if (degree_of(squared) != 2 * degree_of(t)) return false;
    }
    return true;
}

std::optional<std::int64_t> gfp_summand(const Summand& s) {
    if (s.stab.k != s.stab.n) return std::nullopt;
    return s.degree.fixed_dim(s.stab);
}

PoincareSeries gfp_exterior_series(int cutoff) {
    PoincareSeries s = PoincareSeries::one(cutoff);
    for (int i = 2; i <= cutoff; ++i) s *= PoincareSeries::binomial_power(cutoff, i, 1);
    return s;
}

PoincareSeries gfp_polynomial_series(int cutoff, int b_degree) {
    PoincareSeries s = PoincareSeries::geometric(cutoff, b_degree);
    for (int j = 3; j <= cutoff; j += 2) s *= PoincareSeries::geometric(cutoff, j);
    return s;
}

bool gfp_poincare_check(int cutoff) {
    if (cutoff < 0 || cutoff > 64) throw std::invalid_argument("gfp cutoff must be in [0, 64]");
    return gfp_exterior_series(cutoff) == gfp_polynomial_series(cutoff, 2);
}

std::optional<std::int64_t> phi_of_A_map(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("f_i needs i >= 1");
    if (is_mersenne(i) || i % 2 != 0) return std::nullopt;
    return i;
}

PoincareSeries squarefree_tau_fixed_series(int index_floor, int cutoff) {
    std::vector<int> weights;
    // The C_2-fixed dimension of c + s sigma is c.
    for (int i = index_floor; i < 31; ++i) {
        const std::int64_t fixed = degree_of(TauMonomial::tau(i)).c;
        if (fixed > cutoff) break;
        weights.push_back(static_cast<int>(fixed));
    }
    PoincareSeries s(cutoff);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << weights.size()); ++subset) {
        std::int64_t d = 0;
        for (std::size_t p = 0; p < weights.size(); ++p) {
            if (subset & (std::uint64_t{1} << p)) d += weights[p];
        }
        if (d <= cutoff) s.add_term(static_cast<int>(d));
    }
    return s;
}

}  // namespace eqsteenrod
