#include "eqsteenrod/gs_e2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

#include "eqsteenrod/mult_structure.hpp"

namespace eqsteenrod {

namespace {

/// Slots i whose mbar_i (underlying dimension 2 d_i) fits under the cutoff.
std::vector<std::int64_t> mbar_degrees(const GeneratorProfile& profile, std::int64_t cutoff) {
    std::vector<std::int64_t> out;
    const int bound = profile.degrees.size_bound();
    for (int i = 1;; ++i) {
        if (profile.max_index > 0 && i > profile.max_index) break;
        if (bound > 0 && i > bound) break;
        if (profile.degrees.style() == DegreeList::Style::bp && i >= 62) break;
        const std::int64_t d = profile.degrees(i);
        if (2 * d > cutoff && profile.degrees.style() != DegreeList::Style::explicit_list) break;
        out.push_back(d);
    }
    while (!out.empty() && 2 * out.back() > cutoff) out.pop_back();
    return out;
}

std::map<ROC2Degree, std::int64_t> truncate(const std::map<ROC2Degree, std::int64_t>& ranks, std::int64_t cutoff) {
    std::map<ROC2Degree, std::int64_t> out;
    for (const auto& [deg, r] : ranks) {
        if (deg.dim() <= cutoff && r != 0) out[deg] = r;
    }
    return out;
}

}  // namespace

std::int64_t slice_weight(std::span<const std::int64_t> exps, const DegreeList& degrees) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("monomial exponents must be >= 0");
        if (exps[i] != 0) w += exps[i] * 2 * degrees(static_cast<int>(i) + 1);
    }
    return w;
}

std::string E2Entry::name() const {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < m_exps.size(); ++i) {
        if (m_exps[i] == 0) continue;
        if (any) out << " ";
        out << "m" << i + 1;
        if (m_exps[i] > 1) out << "^" << m_exps[i];
        any = true;
    }
    for (int t : tau) {
        if (any) out << " ";
        out << "t" << t;
        any = true;
    }
    return any ? out.str() : "1";
}

std::map<ROC2Degree, std::int64_t> E2Basis::rank_function() const {
    std::map<ROC2Degree, std::int64_t> out;
    for (const E2Entry& e : entries) ++out[e.degree];
    return out;
}

std::map<std::pair<ROC2Degree, std::int64_t>, std::int64_t> E2Basis::chart() const {
    std::map<std::pair<ROC2Degree, std::int64_t>, std::int64_t> out;
    for (const E2Entry& e : entries) ++out[{e.degree, e.weight}];
    return out;
}

E2Basis e2_basis(const GeneratorProfile& profile, int tau_floor, std::int64_t cutoff) {
    if (cutoff < 0) throw std::invalid_argument("dimension cutoff must be >= 0");
    if (tau_floor != 0 && tau_floor != 1) throw std::invalid_argument("tau floor must be 0 or 1");

    std::vector<int> taus;
    for (int i = tau_floor; i < 60; ++i) {
        if (degree_of(TauMonomial::tau(i)).dim() > cutoff) break;
        taus.push_back(i);
    }
    const std::vector<std::int64_t> mdeg = mbar_degrees(profile, cutoff);

    E2Basis basis{profile, tau_floor, cutoff, {}};
    E2Entry current{{}, std::vector<std::int64_t>(mdeg.size(), 0), {}, 0};

    auto poly = [&](auto&& self, std::size_t slot, ROC2Degree deg) -> void {
        if (slot == mdeg.size()) {
            E2Entry e = current;
            e.degree = deg;
            e.weight = slice_weight(e.m_exps, profile.degrees);
            basis.entries.push_back(std::move(e));
            return;
        }
        const ROC2Degree step = ROC2Degree::rho_multiple(mdeg[slot]);
        for (std::int64_t e = 0; deg.dim() + e * step.dim() <= cutoff; ++e) {
            current.m_exps[slot] = e;
            self(self, slot + 1, deg + e * step);
        }
        current.m_exps[slot] = 0;
    };
    auto exterior = [&](auto&& self, std::size_t pos, ROC2Degree deg) -> void {
        if (pos == taus.size()) {
            poly(poly, 0, deg);
            return;
        }
        self(self, pos + 1, deg);
        const ROC2Degree step = degree_of(TauMonomial::tau(taus[pos]));
        if (deg.dim() + step.dim() <= cutoff) {
            current.tau.push_back(taus[pos]);
            self(self, pos + 1, deg + step);
            current.tau.pop_back();
        }
    };
    exterior(exterior, 0, ROC2Degree{});

    std::ranges::sort(basis.entries, [](const E2Entry& x, const E2Entry& y) {
        return std::forward_as_tuple(x.degree.dim(), x.degree, x.weight, x.tau, x.m_exps) <
               std::forward_as_tuple(y.degree.dim(), y.degree, y.weight, y.tau, y.m_exps);
    });
    return basis;
}

CollapseResult collapse_details(std::int64_t cutoff) {
    if (cutoff < 0 || cutoff > 20) throw std::invalid_argument("collapse check cutoff must be in [0, 20]");
    CollapseResult r;
    r.e2 = e2_basis(GeneratorProfile::bp(), 1, cutoff).rank_function();
    const int n = static_cast<int>(cutoff / 2);
    r.expected = truncate(collapse_homological(expected_ranks(n, cutoff)), cutoff);
    r.homology =
        truncate(collapse_homological(homology_ranks(build_complex(PolyGenerators::standard(n), n, cutoff))), cutoff);
    r.matches_expected = r.e2 == r.expected;
    r.matches_homology = r.e2 == r.homology;
    return r;
}

bool collapse_check(std::int64_t cutoff) { return collapse_details(cutoff).passed(); }

std::vector<PermanentCycleAudit> permanent_cycle_report(std::int64_t cutoff) {
    std::vector<PermanentCycleAudit> out;
    if (cutoff < 0) return out;
    const E2Basis basis = e2_basis(GeneratorProfile::bp(), 1, cutoff);
    for (int i = 1; i < 60; ++i) {
        const ROC2Degree td = degree_of(TauMonomial::tau(i));
        if (td.dim() > cutoff) break;
        PermanentCycleAudit audit{i, td, {}, true, {}};
        // d_r has stem -1 and raises filtration by r >= 2; taubar_i sits in
        // filtration 0, so targets have weight >= 2 and smaller dimension,
        // and can only involve taubar_j with j < i.
        for (const E2Entry& e : basis.entries) {
            if (e.weight < 2 || e.degree.dim() > td.dim() - 1) continue;
            if (std::ranges::any_of(e.tau, [i](int t) { return t >= i; })) continue;
            audit.targets.push_back(e);
        }
        if (i == 1) {
            audit.reason = "targets are multiples of xibar_1; the Hurewicz image of vbar_1 vanishes, so the differential is zero";
        } else {
            audit.reason = "taubar_" + std::to_string(i - 1) + "^2 = a_sigma taubar_" + std::to_string(i) +
                           " is a permanent cycle and all targets are a_sigma-torsion free";
        }
        out.push_back(std::move(audit));
    }
    return out;
}

namespace {

struct GeneralElement {
    EqFnSeq seq;
    std::vector<std::vector<std::int64_t>> exps;

    GeneralElement rotate(int r, int len) const {
        GeneralElement out{seq.rotate(r), exps};
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (int j = 0; j < len; ++j) {
                out.exps[i][static_cast<std::size_t>((j + r) % len)] = exps[i][static_cast<std::size_t>(j)];
            }
        }
        return out;
    }

    friend bool operator==(const GeneralElement&, const GeneralElement&) = default;
    friend bool operator<(const GeneralElement& x, const GeneralElement& y) {
        if (x.seq != y.seq) return x.seq < y.seq;
        return x.exps < y.exps;
    }
};

}  // namespace

std::vector<E2OrbitRecord> e2_basis_general(int n, const GeneratorProfile& profile, std::int64_t cutoff) {
    if (n < 1 || n > 4) throw SizeError("n out of range: " + std::to_string(n) + " (expected 1..4)");
    if (cutoff < 0) throw std::invalid_argument("dimension cutoff must be >= 0");
    const int len = 1 << (n - 1);
    const std::vector<std::int64_t> sdeg = profile.materialize(cutoff);
    const std::vector<std::int64_t> mdeg = mbar_degrees(profile, cutoff);
    std::vector<EqFn> all_fns;
    for (const EqFn& f : enumerate_eqfns(n)) all_fns.push_back(f);

    std::vector<E2OrbitRecord> out;
    std::vector<EqFn> slots(sdeg.size(), EqFn::constant_b(n));
    std::vector<std::vector<std::int64_t>> exps(mdeg.size(), std::vector<std::int64_t>(static_cast<std::size_t>(len), 0));

    auto leaf = [&](std::int64_t used, std::int64_t weight) {
        const GeneralElement x{EqFnSeq(n, slots), exps};
        int period = len;
        for (int r = 1; r < len; ++r) {
            const GeneralElement y = x.rotate(r, len);
            if (y < x) return;
            if (y == x && period == len) period = r;
        }
        // The least period of a rotation action on Z/L divides L.
        const Subgroup stab = Subgroup::make(n - std::countr_zero(static_cast<unsigned>(period)), n);
        const std::int64_t base_dim = degree_seq(x.seq, profile.degrees).dim();
        out.push_back(E2OrbitRecord{x.seq, x.exps, false, stab, period, base_dim + weight, weight});
        if (profile.mod2 && used + 1 <= cutoff) {
            out.push_back(E2OrbitRecord{x.seq, x.exps, true, stab, period, base_dim + weight + 1, weight});
        }
    };

    auto poly = [&](auto&& self, std::size_t var, std::int64_t used, std::int64_t weight) -> void {
        if (var == mdeg.size() * static_cast<std::size_t>(len)) {
            leaf(used, weight);
            return;
        }
        const std::size_t slot = var / static_cast<std::size_t>(len);
        const std::size_t coset = var % static_cast<std::size_t>(len);
        const std::int64_t step = 2 * mdeg[slot];
        for (std::int64_t e = 0; used + e * step <= cutoff; ++e) {
            exps[slot][coset] = e;
            self(self, var + 1, used + e * step, weight + e * step);
        }
        exps[slot][coset] = 0;
    };

    auto seqs = [&](auto&& self, std::size_t slot, std::int64_t used) -> void {
        if (slot == sdeg.size()) {
            poly(poly, 0, used, 0);
            return;
        }
        const std::int64_t cell = 2 * sdeg[slot] + 1;
        for (const EqFn& f : all_fns) {
            if (used + f.a_positions() * cell > cutoff) continue;
            slots[slot] = f;
            self(self, slot + 1, used + f.a_positions() * cell);
        }
        slots[slot] = EqFn::constant_b(n);
    };
    seqs(seqs, 0, 0);

    std::ranges::sort(out, [](const E2OrbitRecord& x, const E2OrbitRecord& y) {
        return std::forward_as_tuple(x.underlying_dim, x.weight, x.seq, x.m_exps, x.tau0) <
               std::forward_as_tuple(y.underlying_dim, y.weight, y.seq, y.m_exps, y.tau0);
    });
    return out;
}

}  // namespace eqsteenrod
