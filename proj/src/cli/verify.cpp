#include "cli/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eqsteenrod/eqfun.hpp"
#include "eqsteenrod/gs_e2.hpp"
#include "eqsteenrod/koszul.hpp"
#include "eqsteenrod/mult_structure.hpp"
#include "eqsteenrod/splitting.hpp"

namespace eqsteenrod::cli {

namespace {

int effective_cutoff(const VerifyOptions& o, int fallback, int cap) { return std::min(o.cutoff.value_or(fallback), cap); }

int max_n_capped(const VerifyOptions& o, int cap) { return std::clamp(o.max_n, 1, cap); }

std::size_t brute_force_orbit_count(int n) {
    const int len = 1 << (n - 1);
    const std::uint32_t full = len == 32 ? ~0U : ((1U << len) - 1);
    std::set<std::uint32_t> reps;
    for (std::uint64_t m = 0; m <= full; ++m) {
        auto best = static_cast<std::uint32_t>(m);
        for (int r = 1; r < len; ++r) {
            const auto x = static_cast<std::uint32_t>(m);
            const std::uint32_t rot = ((x << r) | (x >> (len - r))) & full;
            best = std::min(best, rot);
        }
        reps.insert(best);
    }
    return reps.size();
}

CheckResult check_orbits(const VerifyOptions& o) {
    const int max_n = max_n_capped(o, 4);
    CheckResult r{"orbits", "n<=" + std::to_string(max_n), true, {}};
    std::ostringstream counts;
    for (int n = 1; n <= max_n; ++n) {
        const auto recs = orbits(n);
        std::uint64_t total = 0;
        for (const auto& rec : recs) {
            total += static_cast<std::uint64_t>(rec.orbit_size);
            if (rec.orbit_size * rec.stabilizer.order() != (std::int64_t{1} << n)) r.passed = false;
        }
        if (total != (std::uint64_t{1} << (1U << (n - 1)))) r.passed = false;
        if (recs.size() != necklace_count(n) || recs.size() != brute_force_orbit_count(n)) r.passed = false;
        counts << (n > 1 ? "," : "") << recs.size();
    }
    r.detail = "counts " + counts.str();
    return r;
}

CheckResult check_tensor(const VerifyOptions& o) {
    const int max_n = max_n_capped(o, 4);
    CheckResult r{"tensor", "n<=" + std::to_string(max_n) + " i<=6", true, {}};
    int failures = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (int i = 1; i <= 6; ++i) failures += tensor_expansion_check(n, i) ? 0 : 1;
    }
    r.passed = failures == 0;
    r.detail = std::to_string(max_n * 6 - failures) + "/" + std::to_string(max_n * 6) + " identities";
    return r;
}

CheckResult check_basis(const VerifyOptions& o) {
    const int max_n = max_n_capped(o, 3);
    const int cutoff = effective_cutoff(o, 24, 24);
    CheckResult r{"basis", "n<=" + std::to_string(max_n) + " index<=3 D=" + std::to_string(cutoff), true, {}};
    std::int64_t summands = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const GeneratorProfile& p : {GeneratorProfile::mu(false, 3), GeneratorProfile::mu(true, 3),
                                          GeneratorProfile::bp(false, 3), GeneratorProfile::bp(true, 3)}) {
            const auto basis = basis_up_to(n, p, cutoff);
            summands += static_cast<std::int64_t>(basis.size());
            if (orbit_weighted_series(basis, cutoff) != expected_basis_series(n, p, cutoff)) r.passed = false;
            if (cell_table(basis).total() != static_cast<std::int64_t>(basis.size())) r.passed = false;
        }
    }
    r.detail = std::to_string(summands) + " summands";
    return r;
}

CheckResult check_koszul(const VerifyOptions& o) {
    const int cutoff = effective_cutoff(o, 16, 16);
    CheckResult r{"koszul", "N<=7 D=" + std::to_string(cutoff), true, {}};
    std::int64_t classes = 0;
    for (int n = 0; n <= 7; ++n) {
        const KoszulComplex cx = build_complex(PolyGenerators::standard(n), n, cutoff);
        const BigradedRanks h = homology_ranks(cx);
        if (!cx.differential_squares_to_zero()) r.passed = false;
        if (h != expected_ranks(n, cutoff)) r.passed = false;
        auto chi_h = euler_characteristics(h);
        auto chi_c = cx.euler_characteristics();
        std::erase_if(chi_h, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(chi_c, [](const auto& kv) { return kv.second == 0; });
        if (chi_h != chi_c) r.passed = false;
        for (const auto& [bd, rank] : h) classes += rank;
    }
    r.detail = std::to_string(classes) + " classes, d^2=0, euler ok";
    if (!r.passed) r.detail = "mismatch";
    return r;
}

CheckResult check_relation(const VerifyOptions& o) {
    const int max_n = max_n_capped(o, 4);
    CheckResult r{"relation", "n<=" + std::to_string(max_n) + " i<=16", true, {}};
    for (int n = 1; n <= max_n; ++n) r.passed = r.passed && relation_degree_check(n, 16);
    r.detail = r.passed ? "degrees consistent" : "degree mismatch";
    return r;
}

CheckResult check_gfp(const VerifyOptions& o) {
    const int cutoff = effective_cutoff(o, 30, 64);
    CheckResult r{"gfp", "D=" + std::to_string(cutoff), true, {}};
    const bool series = gfp_poincare_check(cutoff);
    // Square-free taubar monomials rebuild one class per fixed dimension.
    const PoincareSeries taus = squarefree_tau_fixed_series(0, cutoff);
    const bool binary = taus == PoincareSeries::geometric(cutoff, 1);
    r.passed = series && binary;
    r.detail = std::string("exterior=polynomial ") + (series ? "yes" : "no") + ", binary tau count " +
               (binary ? "yes" : "no");
    return r;
}

CheckResult check_tau(const VerifyOptions&) {
    CheckResult r{"tau", "index<=6 asigma<=3", true, {}};
    r.passed = tau_algebra_check(1, 6, 3) && tau_algebra_check(0, 6, 0);
    r.detail = r.passed ? "associative, commutative" : "law violated";
    return r;
}

CheckResult check_collapse(const VerifyOptions& o) {
    const int cutoff = effective_cutoff(o, 16, 20);
    CheckResult r{"collapse", "n=1 D=" + std::to_string(cutoff), true, {}};
    const CollapseResult c = collapse_details(cutoff);
    r.passed = c.passed();
    std::int64_t total = 0;
    for (const auto& [deg, rank] : c.e2) total += rank;
    r.detail = std::to_string(total) + " E2 generators";
    return r;
}

CheckResult check_e2series(const VerifyOptions& o) {
    const int cutoff = effective_cutoff(o, 16, 24);
    CheckResult r{"e2series", "D=" + std::to_string(cutoff), true, {}};
    PoincareSeries expected = PoincareSeries::one(cutoff);
    for (int i = 1; (std::int64_t{2} << i) - 1 <= cutoff || 2 * ((std::int64_t{1} << i) - 1) <= cutoff; ++i) {
        expected *= PoincareSeries::geometric(cutoff, static_cast<int>(2 * ((std::int64_t{1} << i) - 1)));
        expected *= PoincareSeries::binomial_power(cutoff, static_cast<int>((std::int64_t{2} << i) - 1), 1);
    }
    PoincareSeries actual(cutoff);
    const E2Basis basis = e2_basis(GeneratorProfile::bp(), 1, cutoff);
    for (const E2Entry& e : basis.entries) actual.add_term(static_cast<int>(e.degree.dim()));
    r.passed = actual == expected;
    r.detail = std::to_string(basis.entries.size()) + " generators";
    return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"orbits", "tensor",   "basis",   "koszul",  "relation",
                                                "gfp",    "tau",      "collapse", "e2series"};
    return names;
}

bool is_check_name(const std::string& name) { return std::ranges::find(check_names(), name) != check_names().end(); }

CheckResult run_check(const std::string& name, const VerifyOptions& o) {
    if (name == "orbits") return check_orbits(o);
    if (name == "tensor") return check_tensor(o);
    if (name == "basis") return check_basis(o);
    if (name == "koszul") return check_koszul(o);
    if (name == "relation") return check_relation(o);
    if (name == "gfp") return check_gfp(o);
    if (name == "tau") return check_tau(o);
    if (name == "collapse") return check_collapse(o);
    if (name == "e2series") return check_e2series(o);
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    out.reserve(names.size());
    for (const auto& name : names) out.push_back(run_check(name, o));
    return out;
}

bool tau_algebra_check(int index_floor, int max_index, int max_asigma) {
    std::vector<TauMonomial> elems;
    const int width = max_index - index_floor + 1;
    for (std::uint32_t subset = 0; subset < (1U << width); ++subset) {
        std::vector<int> idx;
        for (int b = 0; b < width; ++b) {
            if (subset & (1U << b)) idx.push_back(index_floor + b);
        }
        for (int a = 0; a <= max_asigma; ++a) {
            TauMonomial m = TauMonomial::taus(idx);
            m.a_sigma_exp = a;
            elems.push_back(std::move(m));
        }
    }
    const std::size_t count = elems.size();
    std::vector<TauMonomial> table;
    table.reserve(count * count);
    for (const auto& x : elems) {
        for (const auto& y : elems) table.push_back(tau_multiply(x, y, index_floor));
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (table[i * count + j] != table[j * count + i]) return false;
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            const TauMonomial& xy = table[i * count + j];
            for (std::size_t k = 0; k < count; ++k) {
                if (tau_multiply(xy, elems[k], index_floor) != tau_multiply(elems[i], table[j * count + k], index_floor)) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace eqsteenrod::cli
