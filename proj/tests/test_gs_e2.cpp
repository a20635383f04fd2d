#include "doctest.h"

#include <map>
#include <set>

#include "eqsteenrod/gs_e2.hpp"

using namespace eqsteenrod;

namespace {

/// prod_{i>=1} (1 + t^{2^{i+1}-1}) / (1 - t^{2(2^i-1)}) by dimension.
std::vector<std::int64_t> e2_dim_oracle(int cutoff) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(cutoff) + 1, 0);
    c[0] = 1;
    for (std::int64_t i = 1; (std::int64_t{1} << (i + 1)) - 2 <= cutoff; ++i) {
        const std::int64_t tau = (std::int64_t{1} << (i + 1)) - 1;
        for (std::int64_t d = cutoff; d >= tau; --d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - tau)];
        const std::int64_t m = tau - 1;
        for (std::int64_t d = m; d <= cutoff; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - m)];
    }
    return c;
}

std::set<std::string> names(const E2Basis& b) {
    std::set<std::string> out;
    for (const auto& e : b.entries) out.insert(e.name());
    return out;
}

}  // namespace

TEST_CASE("slice weight") {
    const DegreeList bp = DegreeList::bp();
    const std::vector<std::int64_t> m1sq{2}, empty{}, m2{0, 1}, mix{2, 1};
    CHECK(slice_weight(m1sq, bp) == 4);
    CHECK(slice_weight(empty, bp) == 0);
    CHECK(slice_weight(m2, bp) == 6);
    CHECK(slice_weight(mix, bp) == slice_weight(m1sq, bp) + slice_weight(m2, bp));
    const std::vector<std::int64_t> neg{-1};
    CHECK_THROWS(slice_weight(neg, bp));
}

TEST_CASE("E2 basis examples") {
    const E2Basis b3 = e2_basis(GeneratorProfile::bp(), 1, 3);
    CHECK(names(b3) == std::set<std::string>{"1", "m1", "t1"});
    REQUIRE(b3.entries.size() == 3);
    CHECK(b3.entries[0].name() == "1");
    CHECK(b3.entries[1].degree == ROC2Degree{1, 1});
    CHECK(b3.entries[1].weight == 2);
    CHECK(b3.entries[2].degree == ROC2Degree{2, 1});
    CHECK(b3.entries[2].weight == 0);

    CHECK(names(e2_basis(GeneratorProfile::bp(), 1, 0)) == std::set<std::string>{"1"});

    const auto n6 = names(e2_basis(GeneratorProfile::bp(), 1, 6));
    CHECK(n6.count("m1^2"));
    CHECK(n6.count("m1 t1"));
    CHECK(n6.count("m2"));
    CHECK_FALSE(n6.count("t1^2"));

    const auto f0 = names(e2_basis(GeneratorProfile::bp(), 0, 3));
    CHECK(f0.count("t0"));
    CHECK(f0.count("m1 t0"));
    CHECK_THROWS(e2_basis(GeneratorProfile::bp(), 2, 3));
    CHECK_THROWS(e2_basis(GeneratorProfile::bp(), 1, -1));
}

TEST_CASE("E2 counts by dimension match the product series") {
    for (int cutoff : {0, 7, 16, 30}) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(cutoff) + 1, 0);
        for (const auto& e : e2_basis(GeneratorProfile::bp(), 1, cutoff).entries) ++counts[static_cast<std::size_t>(e.degree.dim())];
        CHECK(counts == e2_dim_oracle(cutoff));
    }
}

TEST_CASE("entries are sorted and consistent") {
    const E2Basis b = e2_basis(GeneratorProfile::bp(), 1, 20);
    for (std::size_t i = 1; i < b.entries.size(); ++i) CHECK(b.entries[i - 1].degree.dim() <= b.entries[i].degree.dim());
    for (const auto& e : b.entries) {
        CHECK(e.weight == slice_weight(e.m_exps, DegreeList::bp()));
        CHECK(e.degree.dim() <= 20);
        for (std::size_t i = 1; i < e.tau.size(); ++i) CHECK(e.tau[i - 1] < e.tau[i]);
    }
    std::int64_t total = 0;
    for (const auto& [key, c] : b.chart()) total += c;
    CHECK(total == static_cast<std::int64_t>(b.entries.size()));
}

TEST_CASE("collapse at C2 for D <= 16") {
    for (int d = 0; d <= 16; ++d) {
        const CollapseResult r = collapse_details(d);
        CHECK(r.matches_expected);
        CHECK(r.matches_homology);
        CHECK(collapse_check(d));
    }
    CHECK_THROWS(collapse_details(21));
}

TEST_CASE("permanent cycle report") {
    CHECK(permanent_cycle_report(2).empty());
    const auto r = permanent_cycle_report(16);
    REQUIRE(r.size() == 3);
    CHECK(r[0].tau_index == 1);
    CHECK(r[0].tau_degree == ROC2Degree{2, 1});
    for (const auto& a : r) {
        CHECK(a.excluded);
        CHECK_FALSE(a.reason.empty());
        for (const auto& t : a.targets) {
            CHECK(t.weight >= 2);
            CHECK(t.degree.dim() <= a.tau_degree.dim() - 1);
            for (int i : t.tau) CHECK(i < a.tau_index);
        }
    }
    CHECK(r[1].tau_index == 2);
    CHECK_FALSE(r[1].targets.empty());
}

TEST_CASE("general E2 orbit enumeration") {
    for (int cutoff : {0, 6, 15}) {
        std::map<std::int64_t, std::int64_t> direct, general;
        for (const auto& e : e2_basis(GeneratorProfile::bp(), 1, cutoff).entries) ++direct[e.degree.dim()];
        for (const auto& r : e2_basis_general(1, GeneratorProfile::bp(), cutoff)) ++general[r.underlying_dim];
        CHECK(direct == general);
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto& r : e2_basis_general(n, GeneratorProfile::bp(true), 10)) {
            CHECK(r.orbit_size * r.stab.order() == (std::int64_t{1} << n));
            CHECK(r.underlying_dim <= 10);
            CHECK(r.weight <= r.underlying_dim);
            CHECK(r.weight % 2 == 0);
        }
    }
    CHECK_THROWS_AS(e2_basis_general(5, GeneratorProfile::bp(), 4), SizeError);
}
