#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "eqsteenrod/eqfun.hpp"

using namespace eqsteenrod;

namespace {

std::string rotate_word(const std::string& w, std::size_t r) {
    return w.substr(w.size() - r % w.size()) + w.substr(0, w.size() - r % w.size());
}

/// Orbit oracle on plain strings: canonical form is the minimal rotation
/// with 'a' < 'b'.
std::map<std::string, std::size_t> brute_orbits(int n) {
    const std::size_t len = std::size_t{1} << (n - 1);
    std::map<std::string, std::size_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
        std::string w(len, 'b');
        for (std::size_t j = 0; j < len; ++j) {
            if (m >> j & 1U) w[j] = 'a';
        }
        std::string best = w;
        for (std::size_t r = 1; r < len; ++r) best = std::min(best, rotate_word(w, r));
        ++out[best];
    }
    return out;
}

/// Largest C_{2^k} fixing w: the generator of C_{2^k} rotates by 2^{n-k}.
int brute_stabilizer_exponent(const std::string& w, int n) {
    for (int k = n; k >= 1; --k) {
        const std::size_t shift = std::size_t{1} << (n - k);
        if (shift >= w.size() || rotate_word(w, shift) == w) return k;
    }
    return 1;
}

}  // namespace

TEST_CASE("enumeration sizes and examples") {
    std::vector<std::string> n1, n2;
    for (const EqFn& f : enumerate_eqfns(1)) n1.push_back(f.to_string());
    for (const EqFn& f : enumerate_eqfns(2)) n2.push_back(f.to_string());
    CHECK(n1 == std::vector<std::string>{"a", "b"});
    CHECK(n2 == std::vector<std::string>{"aa", "ab", "ba", "bb"});
    CHECK(std::ranges::distance(enumerate_eqfns(3)) == 16);
    CHECK(std::ranges::distance(enumerate_eqfns(4)) == 256);
    std::set<std::string> seen;
    for (const EqFn& f : enumerate_eqfns(4)) seen.insert(f.to_string());
    CHECK(seen.size() == 256);
    CHECK_THROWS_AS(enumerate_eqfns(0), SizeError);
    CHECK_THROWS_AS(enumerate_eqfns(7), SizeError);
}

TEST_CASE("stabilizer examples") {
    CHECK(stabilizer(EqFn::parse("aa")) == Subgroup::make(2, 2));
    CHECK(stabilizer(EqFn::parse("ab")) == Subgroup::make(1, 2));
    CHECK(stabilizer(EqFn::parse("abab")) == Subgroup::make(2, 3));
    CHECK(stabilizer(EqFn::parse("a")) == Subgroup::make(1, 1));
    for (int n = 1; n <= 5; ++n) {
        for (const EqFn& f : enumerate_eqfns(n)) {
            CHECK(stabilizer(f).k == brute_stabilizer_exponent(f.to_string(), n));
            CHECK(stabilizer(f).k >= 1);
        }
    }
}

TEST_CASE("orbits match brute force and Burnside") {
    const std::size_t expected[] = {0, 2, 3, 6, 36, 4116};
    for (int n = 1; n <= 5; ++n) {
        const auto recs = orbits(n);
        const auto brute = brute_orbits(n);
        CHECK(recs.size() == expected[n]);
        CHECK(necklace_count(n) == expected[n]);
        REQUIRE(recs.size() == brute.size());
        for (const auto& rec : recs) {
            const auto it = brute.find(rec.representative.to_string());
            REQUIRE(it != brute.end());
            CHECK(static_cast<std::size_t>(rec.orbit_size) == it->second);
            CHECK(rec.orbit_size * rec.stabilizer.order() == (std::int64_t{1} << n));
        }
    }
    const auto n2 = orbits(2);
    REQUIRE(n2.size() == 3);
    CHECK(n2[0].representative.to_string() == "aa");
    CHECK(n2[0].orbit_size == 1);
    CHECK(n2[1].representative.to_string() == "ab");
    CHECK(n2[1].stabilizer == Subgroup::make(1, 2));
    CHECK(n2[2].representative.to_string() == "bb");
}

TEST_CASE("degree_single examples") {
    const InducedDegree d1 = degree_single(EqFn::parse("ab"), 1);
    const Subgroup c2 = Subgroup::make(1, 2), c4 = Subgroup::make(2, 2);
    CHECK(d1.from == c2);
    CHECK(d1.rep == regular(c2) + RealRep::trivial(c2));
    CHECK(d1.dim() == 3);

    const InducedDegree d2 = degree_single(EqFn::parse("aa"), 1);
    CHECK(d2.from == c4);
    CHECK(d2.rep == induce(regular(c2) + RealRep::trivial(c2), c4));
    CHECK(d2.dim() == 6);

    const InducedDegree d3 = degree_single(EqFn::parse("aabb"), 2);
    const Subgroup c2n3 = Subgroup::make(1, 3);
    CHECK(d3.from == c2n3);
    CHECK(d3.rep == 2 * (2 * regular(c2n3) + RealRep::trivial(c2n3)));
    CHECK(d3.dim() == 10);

    const InducedDegree zero = degree_single(EqFn::parse("bb"), 3);
    CHECK(zero.from == c4);
    CHECK(zero.rep.is_zero());
}

TEST_CASE("underlying dimension formula, n <= 4, i <= 8") {
    for (int n = 1; n <= 4; ++n) {
        for (const EqFn& f : enumerate_eqfns(n)) {
            for (int i = 1; i <= 8; ++i) {
                const InducedDegree d = degree_single(f, i);
                CHECK(d.dim() == f.preimage_a_size() / 2 * (2 * i + 1));
                CHECK(d.from == stabilizer(f));
            }
        }
    }
}

TEST_CASE("sequence stabilizer and degree examples") {
    CHECK(stabilizer_seq(EqFnSeq::parse(2, {"ab"})) == Subgroup::make(1, 2));
    CHECK(stabilizer_seq(EqFnSeq::parse(3, {"abab", "aabb"})) == Subgroup::make(1, 3));
    CHECK(stabilizer_seq(EqFnSeq(2)) == Subgroup::make(2, 2));

    const Subgroup c2 = Subgroup::make(1, 2), c4 = Subgroup::make(2, 2);
    const RealRep rho = regular(c2), one = RealRep::trivial(c2);
    CHECK(degree_seq(EqFnSeq::parse(2, {"ab"})).rep == rho + one);

    const InducedDegree d = degree_seq(EqFnSeq::parse(2, {"aa", "ab"}));
    CHECK(d.from == c2);
    CHECK(d.rep == restrict(induce(rho + one, c4), c2) + (2 * rho + one));
    CHECK(d.rep == 2 * (rho + one) + (2 * rho + one));
    CHECK(d.dim() == 11);

    const InducedDegree e = degree_seq(EqFnSeq::parse(2, {"bb", "aa"}));
    CHECK(e.from == c4);
    CHECK(e.rep == induce(2 * rho + one, c4));
    CHECK(e.dim() == 10);

    CHECK(degree_seq(EqFnSeq(3)).rep.is_zero());
    CHECK(degree_seq(EqFnSeq(3)).from == Subgroup::whole(3));
}

TEST_CASE("sequences trim trailing constant b") {
    const EqFnSeq s = EqFnSeq::parse(2, {"ab", "bb", "bb"});
    CHECK(s.size() == 1);
    CHECK(s == EqFnSeq::parse(2, {"ab"}));
    CHECK(s.entry(5).is_constant_b());
    CHECK(EqFnSeq::parse(2, {"bb"}).empty());
}

TEST_CASE("degree additivity and orbit invariance") {
    const DegreeList bp = DegreeList::bp();
    for (int n = 1; n <= 3; ++n) {
        std::vector<EqFn> fns;
        for (const EqFn& f : enumerate_eqfns(n)) fns.push_back(f);
        for (const EqFn& f : fns) {
            for (const EqFn& g : fns) {
                const EqFnSeq s(n, {f, g});
                for (const DegreeList& dl : {DegreeList::mu(), bp}) {
                    const InducedDegree d = degree_seq(s, dl);
                    CHECK(d.dim() == degree_single(f, dl(1)).dim() + degree_single(g, dl(2)).dim());
                    const int len = 1 << (n - 1);
                    for (int r = 1; r < len; ++r) {
                        const EqFnSeq t = s.rotate(r);
                        CHECK(stabilizer_seq(t) == stabilizer_seq(s));
                        CHECK(degree_seq(t, dl) == d);
                    }
                }
                const auto orbit = canonical_orbit(s);
                CHECK(orbit.representative <= s);
                CHECK(orbit.orbit_size * orbit.stabilizer.order() == (std::int64_t{1} << n));
            }
        }
    }
}

TEST_CASE("degree lists") {
    CHECK(DegreeList::mu()(5) == 5);
    CHECK(DegreeList::bp()(1) == 1);
    CHECK(DegreeList::bp()(3) == 7);
    const DegreeList e = DegreeList::explicit_degrees({2, 5});
    CHECK(e(2) == 5);
    CHECK_THROWS(e(3));
    CHECK_THROWS(DegreeList::explicit_degrees({0}));
}

TEST_CASE("parsing and lexicographic rank") {
    CHECK(EqFn::parse("abba").to_string() == "abba");
    CHECK_THROWS(EqFn::parse("abc"));
    CHECK_THROWS(EqFn::parse("aba"));
    for (int n = 1; n <= 3; ++n) {
        std::uint64_t r = 0;
        for (const EqFn& f : enumerate_eqfns(n)) CHECK(f.lex_rank() == r++);
    }
    CHECK(EqFn::parse("aa") < EqFn::parse("ab"));
}
