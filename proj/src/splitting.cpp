#include "eqsteenrod/splitting.hpp"

#include <algorithm>

namespace eqsteenrod {

namespace {

void require_splitting_exponent(int n) {
    if (n < 1 || n > 4) throw SizeError("n out of range: " + std::to_string(n) + " (expected 1..4)");
}

}  // namespace

std::vector<std::int64_t> GeneratorProfile::materialize(std::int64_t cutoff) const {
    std::vector<std::int64_t> out;
    const int bound = degrees.size_bound();
    for (int i = 1;; ++i) {
        if (max_index > 0 && i > max_index) break;
        if (bound > 0 && i > bound) break;
        if (degrees.style() == DegreeList::Style::bp && i >= 62) break;
        const std::int64_t d = degrees(i);
        if (2 * d + 1 > cutoff) {
            if (degrees.style() != DegreeList::Style::explicit_list) break;
        }
        out.push_back(d);
    }
    if (degrees.style() == DegreeList::Style::explicit_list) {
        while (!out.empty() && 2 * out.back() + 1 > cutoff) out.pop_back();
    }
    return out;
}

Summand make_summand(const EqFnSeq& representative, const DegreeList& degrees, bool tau0) {
    const Subgroup h = stabilizer_seq(representative);
    InducedDegree deg = degree_seq(representative, degrees);
    if (tau0) deg.rep += RealRep::trivial(h);
    const std::int64_t dim = deg.dim();
    return Summand{representative, h, std::move(deg), (std::int64_t{1} << representative.n()) / h.order(), dim, tau0};
}

bool canonical_less(const Summand& x, const Summand& y) {
    if (x.underlying_dim != y.underlying_dim) return x.underlying_dim < y.underlying_dim;
    if (x.seq.size() != y.seq.size()) return x.seq.size() < y.seq.size();
    if (x.seq != y.seq) return x.seq < y.seq;
    return !x.tau0 && y.tau0;
}

std::vector<Summand> norm_summands(int n, int i) {
    require_splitting_exponent(n);
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    std::vector<Summand> out;
    for (const auto& orbit : orbits(n)) {
        std::vector<EqFn> entries(static_cast<std::size_t>(i), EqFn::constant_b(n));
        entries.back() = orbit.representative;
        out.push_back(make_summand(EqFnSeq(n, std::move(entries)), DegreeList::mu()));
    }
    std::ranges::sort(out, canonical_less);
    return out;
}

std::vector<Summand> basis_up_to(int n, const GeneratorProfile& profile, std::int64_t cutoff) {
    require_splitting_exponent(n);
    if (cutoff < 0) throw std::invalid_argument("dimension cutoff must be >= 0");
    const std::vector<std::int64_t> degrees = profile.materialize(cutoff);
    const int len = 1 << (n - 1);

    std::vector<std::vector<EqFn>> by_count(static_cast<std::size_t>(len) + 1);
    for (const EqFn& f : enumerate_eqfns(n)) by_count[static_cast<std::size_t>(f.a_positions())].push_back(f);

    std::vector<Summand> out;
    std::vector<EqFn> slots(degrees.size(), EqFn::constant_b(n));

    auto visit_leaf = [&](std::int64_t used) {
        EqFnSeq seq(n, slots);
        if (canonical_orbit(seq).representative != seq) return;
        out.push_back(make_summand(seq, profile.degrees));
        if (profile.mod2 && used + 1 <= cutoff) out.push_back(make_summand(seq, profile.degrees, true));
    };

    auto dfs = [&](auto&& self, std::size_t slot, std::int64_t used) -> void {
        if (slot == degrees.size()) {
            visit_leaf(used);
            return;
        }
        const std::int64_t cell = 2 * degrees[slot] + 1;
        for (int count = 0; count <= len && used + count * cell <= cutoff; ++count) {
            for (const EqFn& f : by_count[static_cast<std::size_t>(count)]) {
                slots[slot] = f;
                self(self, slot + 1, used + count * cell);
            }
        }
        slots[slot] = EqFn::constant_b(n);
    };
    dfs(dfs, 0, 0);

    std::ranges::sort(out, canonical_less);
    return out;
}

PoincareSeries orbit_weighted_series(const std::vector<Summand>& summands, int cutoff) {
    PoincareSeries s(cutoff);
    for (const Summand& x : summands) s.add_term(static_cast<int>(x.underlying_dim), x.orbit_size);
    return s;
}

PoincareSeries expected_basis_series(int n, const GeneratorProfile& profile, int cutoff) {
    const int len = 1 << (n - 1);
    PoincareSeries s = PoincareSeries::one(cutoff);
    for (std::int64_t d : profile.materialize(cutoff)) {
        s *= PoincareSeries::binomial_power(cutoff, static_cast<int>(2 * d + 1), len);
    }
    if (profile.mod2) s *= PoincareSeries::binomial_power(cutoff, 1, 1);
    return s;
}

bool tensor_expansion_check(int n, int i) {
    const auto summands = norm_summands(n, i);
    const int len = 1 << (n - 1);
    const int cutoff = len * (2 * i + 1);
    return orbit_weighted_series(summands, cutoff) == PoincareSeries::binomial_power(cutoff, 2 * i + 1, len);
}

std::int64_t CellTable::total() const {
    std::int64_t t = 0;
    for (const auto& [key, count] : rows) t += count;
    return t;
}

CellTable cell_table(const std::vector<Summand>& summands) {
    CellTable table;
    for (const Summand& s : summands) {
        CellKey key{s.underlying_dim, s.stab.k, {}};
        for (int j = 0; j <= s.stab.k; ++j) key.fixed_dims.push_back(s.degree.fixed_dim(Subgroup::make(j, s.stab.n)));
        ++table.rows[key];
    }
    return table;
}

}  // namespace eqsteenrod
