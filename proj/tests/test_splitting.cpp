#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "eqsteenrod/splitting.hpp"

using namespace eqsteenrod;

namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t cutoff) {
    Poly out(cutoff + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= cutoff; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= cutoff; ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// prod_i (1 + t^{2 d_i + 1})^L, expanded by repeated multiplication.
Poly product_oracle(const std::vector<std::int64_t>& degrees, int len, bool mod2, std::size_t cutoff) {
    Poly out(cutoff + 1, 0);
    out[0] = 1;
    for (std::int64_t d : degrees) {
        Poly factor(cutoff + 1, 0);
        factor[0] = 1;
        if (static_cast<std::size_t>(2 * d + 1) <= cutoff) factor[static_cast<std::size_t>(2 * d + 1)] = 1;
        for (int p = 0; p < len; ++p) out = poly_mul(out, factor, cutoff);
    }
    if (mod2) out = poly_mul(out, Poly{1, 1}, cutoff);
    return out;
}

Poly as_poly(const PoincareSeries& s) { return s.coefficients(); }

/// All sequences of words over the N slots with dimension <= cutoff, grouped
/// into orbits under simultaneous rotation of plain strings.
std::map<std::int64_t, std::int64_t> brute_orbit_dims(int n, const std::vector<std::int64_t>& degrees, std::int64_t cutoff) {
    const std::size_t len = std::size_t{1} << (n - 1);
    std::vector<std::string> words;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
        std::string w(len, 'b');
        for (std::size_t j = 0; j < len; ++j) {
            if (m >> j & 1U) w[j] = 'a';
        }
        words.push_back(w);
    }
    std::set<std::vector<std::string>> reps;
    std::map<std::int64_t, std::int64_t> dims;
    std::vector<std::string> cur(degrees.size());
    auto rec = [&](auto&& self, std::size_t slot, std::int64_t used) -> void {
        if (slot == degrees.size()) {
            std::vector<std::string> best = cur;
            for (std::size_t r = 1; r < len; ++r) {
                std::vector<std::string> rot;
                for (const auto& w : cur) rot.push_back(w.substr(len - r) + w.substr(0, len - r));
                best = std::min(best, rot);
            }
            if (reps.insert(best).second) ++dims[used];
            return;
        }
        for (const auto& w : words) {
            const auto a = static_cast<std::int64_t>(std::count(w.begin(), w.end(), 'a'));
            const std::int64_t d = used + a * (2 * degrees[slot] + 1);
            if (d > cutoff) continue;
            cur[slot] = w;
            self(self, slot + 1, d);
        }
    };
    rec(rec, 0, 0);
    return dims;
}

}  // namespace

TEST_CASE("norm summand examples") {
    const auto s2 = norm_summands(2, 1);
    REQUIRE(s2.size() == 3);
    const Subgroup c2 = Subgroup::make(1, 2), c4 = Subgroup::make(2, 2);
    CHECK(s2[0].stab == c4);
    CHECK(s2[0].degree.rep.is_zero());
    CHECK(s2[1].stab == c2);
    CHECK(s2[1].degree.rep == regular(c2) + RealRep::trivial(c2));
    CHECK(s2[1].orbit_size == 2);
    CHECK(s2[2].stab == c4);
    CHECK(s2[2].degree.rep == induce(regular(c2) + RealRep::trivial(c2), c4));

    const auto s1 = norm_summands(1, 1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].underlying_dim == 0);
    CHECK(s1[1].degree.rep == regular(Subgroup::make(1, 1)) + RealRep::trivial(Subgroup::make(1, 1)));

    std::multiset<std::int64_t> dims;
    for (const auto& s : norm_summands(3, 1)) dims.insert(s.underlying_dim);
    CHECK(dims == std::multiset<std::int64_t>{0, 3, 6, 6, 9, 12});
    CHECK_THROWS_AS(norm_summands(5, 1), SizeError);
}

TEST_CASE("basis examples") {
    const auto b1 = basis_up_to(1, GeneratorProfile::mu(), 3);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0].underlying_dim == 0);
    CHECK(b1[1].underlying_dim == 3);
    CHECK(b1[1].seq == EqFnSeq::parse(1, {"a"}));

    const auto b2 = basis_up_to(2, GeneratorProfile::mu(), 3);
    REQUIRE(b2.size() == 2);
    CHECK(b2[1].underlying_dim == 3);
    CHECK(b2[1].stab == Subgroup::make(1, 2));
    CHECK(b2[1].orbit_size == 2);

    for (int n = 1; n <= 4; ++n) {
        const auto b0 = basis_up_to(n, GeneratorProfile::bp(true), 0);
        REQUIRE(b0.size() == 1);
        CHECK(b0[0].seq.empty());
        CHECK(b0[0].degree.rep.is_zero());
    }
}

TEST_CASE("cell tables") {
    const CellTable t = cell_table(norm_summands(2, 1));
    REQUIRE(t.rows.size() == 3);
    auto it = t.rows.begin();
    CHECK(it->first.underlying_dim == 0);
    CHECK(it->first.induced_from == 2);
    ++it;
    CHECK(it->first.underlying_dim == 3);
    CHECK(it->first.induced_from == 1);
    ++it;
    CHECK(it->first.underlying_dim == 6);
    CHECK(it->first.fixed_dims == std::vector<std::int64_t>{6, 4, 2});
    CHECK(t.total() == 3);

    CHECK(cell_table({}).empty());

    const auto b = basis_up_to(1, GeneratorProfile::bp(true), 10);
    std::set<std::int64_t> dims;
    for (const auto& [key, count] : cell_table(b).rows) dims.insert(key.underlying_dim);
    CHECK(dims == std::set<std::int64_t>{0, 1, 3, 4, 7, 8, 10});
    CHECK(cell_table(b).total() == static_cast<std::int64_t>(b.size()));
}

TEST_CASE("tensor expansion identity, n <= 4, i <= 6") {
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= 6; ++i) CHECK(tensor_expansion_check(n, i));
    }
    const auto s = norm_summands(2, 1);
    const PoincareSeries p = orbit_weighted_series(s, 6);
    CHECK(as_poly(p) == Poly{1, 0, 0, 2, 0, 0, 1});
}

TEST_CASE("basis series against a polynomial product, n <= 3, N <= 3, D <= 24") {
    for (int n = 1; n <= 3; ++n) {
        for (int big_n = 1; big_n <= 3; ++big_n) {
            for (bool mod2 : {false, true}) {
                for (const GeneratorProfile& p : {GeneratorProfile::mu(mod2, big_n), GeneratorProfile::bp(mod2, big_n)}) {
                    for (int cutoff : {0, 5, 13, 24}) {
                        std::vector<std::int64_t> degrees;
                        for (int i = 1; i <= big_n; ++i) degrees.push_back(p.degrees(i));
                        const auto basis = basis_up_to(n, p, cutoff);
                        CHECK(as_poly(orbit_weighted_series(basis, cutoff)) ==
                              product_oracle(degrees, 1 << (n - 1), mod2, static_cast<std::size_t>(cutoff)));
                    }
                }
            }
        }
    }
}

TEST_CASE("orbit counts per dimension agree with brute-force enumeration") {
    for (int n = 1; n <= 3; ++n) {
        const int cutoff = n == 3 ? 16 : 24;
        const GeneratorProfile p = GeneratorProfile::mu(false, 3);
        std::vector<std::int64_t> degrees{1, 2, 3};
        std::map<std::int64_t, std::int64_t> counts;
        for (const auto& s : basis_up_to(n, p, cutoff)) ++counts[s.underlying_dim];
        CHECK(counts == brute_orbit_dims(n, degrees, cutoff));
    }
}

TEST_CASE("G-fixed summands form an exterior algebra") {
    for (int n = 1; n <= 3; ++n) {
        const int cutoff = 24;
        const int len = 1 << (n - 1);
        for (const GeneratorProfile& p : {GeneratorProfile::mu(), GeneratorProfile::bp()}) {
            PoincareSeries fixed(cutoff);
            for (const auto& s : basis_up_to(n, p, cutoff)) {
                if (s.stab == Subgroup::whole(n)) fixed.add_term(static_cast<int>(s.underlying_dim));
            }
            Poly oracle(cutoff + 1, 0);
            oracle[0] = 1;
            for (int i = 1; len * (2 * p.degrees(i) + 1) <= cutoff; ++i) {
                Poly f(cutoff + 1, 0);
                f[0] = 1;
                f[static_cast<std::size_t>(len * (2 * p.degrees(i) + 1))] = 1;
                oracle = poly_mul(oracle, f, cutoff);
            }
            CHECK(as_poly(fixed) == oracle);
        }
    }
}

TEST_CASE("summand invariants") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& s : basis_up_to(n, GeneratorProfile::mu(true), 14)) {
            CHECK(s.stab == stabilizer_seq(s.seq));
            CHECK(s.underlying_dim == s.degree.dim());
            CHECK(s.degree.from == s.stab);
            CHECK(s.orbit_size * s.stab.order() == (std::int64_t{1} << n));
            RealRep sum(s.stab);
            for (std::size_t i = 1; i <= s.seq.size(); ++i) {
                const EqFn f = s.seq.entry(static_cast<int>(i));
                if (f.is_constant_b()) continue;
                sum += restrict(degree_single(f, static_cast<std::int64_t>(i)).rep, s.stab);
            }
            if (s.tau0) sum += RealRep::trivial(s.stab);
            CHECK(sum == s.degree.rep);
        }
    }
}

TEST_CASE("canonical ordering") {
    const auto b = basis_up_to(2, GeneratorProfile::mu(true), 12);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK_FALSE(canonical_less(b[i], b[i - 1]));
    CHECK(GeneratorProfile::bp().materialize(15) == std::vector<std::int64_t>{1, 3, 7});
    CHECK(GeneratorProfile::mu(false, 2).materialize(100) == std::vector<std::int64_t>{1, 2});
}
