#include "eqsteenrod/eqfun.hpp"

#include <algorithm>
#include <bit>

namespace eqsteenrod {

void require_eqfn_exponent(int n) {
    if (n < 1 || n > kMaxEqFnExponent) {
        throw SizeError("n out of range: " + std::to_string(n) + " (expected 1.." + std::to_string(kMaxEqFnExponent) +
                        ")");
    }
}

EqFn::EqFn(int n, std::uint32_t a_mask) : n_(n), mask_(a_mask) {
    require_eqfn_exponent(n);
    if ((mask_ & ~full_mask()) != 0) throw std::invalid_argument("mask has bits beyond the coset count");
}

std::uint32_t EqFn::full_mask() const {
    const int len = length();
    return len == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << len) - 1);
}

EqFn EqFn::parse(std::string_view word) {
    const std::size_t len = word.size();
    if (len == 0 || !std::has_single_bit(len) || len > (std::size_t{1} << (kMaxEqFnExponent - 1))) {
        throw std::invalid_argument("function word '" + std::string(word) + "' must have length 2^(n-1)");
    }
    const int n = std::countr_zero(len) + 1;
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < len; ++j) {
        if (word[j] == 'a') mask |= std::uint32_t{1} << j;
        else if (word[j] != 'b') throw std::invalid_argument("function word '" + std::string(word) + "' is not over {a,b}");
    }
    return EqFn(n, mask);
}

EqFn EqFn::constant_a(int n) {
    EqFn f(n, 0);
    f.mask_ = f.full_mask();
    return f;
}

EqFn EqFn::constant_b(int n) { return EqFn(n, 0); }

EqFn EqFn::from_lex_rank(int n, std::uint64_t rank) {
    require_eqfn_exponent(n);
    const int len = 1 << (n - 1);
    std::uint32_t mask = 0;
    for (int j = 0; j < len; ++j) {
        if (((rank >> (len - 1 - j)) & 1U) == 0) mask |= std::uint32_t{1} << j;
    }
    return EqFn(n, mask);
}

int EqFn::a_positions() const { return std::popcount(mask_); }

EqFn EqFn::rotate(std::int64_t r) const {
    const int len = length();
    const int s = static_cast<int>(((r % len) + len) % len);
    if (s == 0) return *this;
    const std::uint64_t wide = mask_;
    const auto rotated = static_cast<std::uint32_t>(((wide << s) | (wide >> (len - s))) & full_mask());
    return EqFn(n_, rotated);
}

std::uint64_t EqFn::lex_rank() const {
    const int len = length();
    std::uint64_t rank = 0;
    for (int j = 0; j < len; ++j) {
        if (!is_a(j)) rank |= std::uint64_t{1} << (len - 1 - j);
    }
    return rank;
}

std::string EqFn::to_string() const {
    std::string s(static_cast<std::size_t>(length()), 'b');
    for (int j = 0; j < length(); ++j) {
        if (is_a(j)) s[static_cast<std::size_t>(j)] = 'a';
    }
    return s;
}

std::strong_ordering operator<=>(const EqFn& x, const EqFn& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.lex_rank() <=> y.lex_rank();
}

Subgroup stabilizer(const EqFn& f) {
    // Smallest shift fixing f; it divides L, hence is a power of two.
    int period = 1;
    while (period < f.length() && f.rotate(period) != f) period *= 2;
    return Subgroup::make(f.n() - std::countr_zero(static_cast<unsigned>(period)), f.n());
}

DegreeList DegreeList::explicit_degrees(std::vector<std::int64_t> degrees) {
    if (std::ranges::any_of(degrees, [](std::int64_t d) { return d <= 0; })) {
        throw std::invalid_argument("generator degrees must be strictly positive");
    }
    return DegreeList(Style::explicit_list, std::move(degrees));
}

std::int64_t DegreeList::operator()(int i) const {
    if (i < 1) throw std::out_of_range("generator index must be >= 1");
    switch (style_) {
        case Style::mu:
            return i;
        case Style::bp:
            if (i >= 62) throw std::overflow_error("BP generator index too large");
            return (std::int64_t{1} << i) - 1;
        case Style::explicit_list:
            if (static_cast<std::size_t>(i) > degrees_.size()) {
                throw std::out_of_range("generator index " + std::to_string(i) + " beyond explicit degree list");
            }
            return degrees_[static_cast<std::size_t>(i - 1)];
    }
    return 0;
}

EqFnSeq::EqFnSeq(int n, std::vector<EqFn> entries) : n_(n), entries_(std::move(entries)) {
    require_eqfn_exponent(n);
    for (const EqFn& f : entries_) {
        if (f.n() != n) throw std::invalid_argument("sequence entries must share the ambient group");
    }
    while (!entries_.empty() && entries_.back().is_constant_b()) entries_.pop_back();
}

EqFnSeq EqFnSeq::parse(int n, const std::vector<std::string>& words) {
    std::vector<EqFn> fs;
    fs.reserve(words.size());
    for (const auto& w : words) fs.push_back(EqFn::parse(w));
    return EqFnSeq(n, std::move(fs));
}

EqFn EqFnSeq::entry(int i) const {
    if (i < 1) throw std::out_of_range("sequence slots are numbered from 1");
    if (static_cast<std::size_t>(i) > entries_.size()) return EqFn::constant_b(n_);
    return entries_[static_cast<std::size_t>(i - 1)];
}

EqFnSeq EqFnSeq::rotate(std::int64_t r) const {
    EqFnSeq out(*this);
    for (EqFn& f : out.entries_) f = f.rotate(r);
    return out;
}

std::vector<std::string> EqFnSeq::words() const {
    std::vector<std::string> w;
    w.reserve(entries_.size());
    for (const EqFn& f : entries_) w.push_back(f.to_string());
    return w;
}

std::strong_ordering operator<=>(const EqFnSeq& x, const EqFnSeq& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(x.entries_.begin(), x.entries_.end(), y.entries_.begin(),
                                                  y.entries_.end());
}

// Fredricksen-Kessler-Maiorana: prenecklaces in lexicographic order; the
// word is a necklace exactly when its Lyndon prefix length p divides L, and
// then p is also its least period.
void for_each_orbit(int n, const std::function<void(const OrbitRecord<EqFn>&)>& visit) {
    require_eqfn_exponent(n);
    const int len = 1 << (n - 1);
    std::vector<int> word(static_cast<std::size_t>(len) + 1, 0);  // 0 = a, 1 = b, 1-indexed
    auto emit = [&](int period) {
        std::uint32_t mask = 0;
        for (int j = 0; j < len; ++j) {
            if (word[static_cast<std::size_t>(j) + 1] == 0) mask |= std::uint32_t{1} << j;
        }
        const int k = n - std::countr_zero(static_cast<unsigned>(period));
        visit(OrbitRecord<EqFn>{EqFn(n, mask), Subgroup::make(k, n), period});
    };
    emit(1);
    for (;;) {
        int i = len;
        while (i > 0 && word[static_cast<std::size_t>(i)] == 1) --i;
        if (i == 0) break;
        word[static_cast<std::size_t>(i)] = 1;
        for (int j = i + 1; j <= len; ++j) word[static_cast<std::size_t>(j)] = word[static_cast<std::size_t>(j - i)];
        if (len % i == 0) emit(i);
    }
}

std::vector<OrbitRecord<EqFn>> orbits(int n) {
    std::vector<OrbitRecord<EqFn>> out;
    out.reserve(static_cast<std::size_t>(necklace_count(n)));
    for_each_orbit(n, [&](const OrbitRecord<EqFn>& r) { out.push_back(r); });
    return out;
}

std::uint64_t necklace_count(int n) {
    require_eqfn_exponent(n);
    const unsigned len = 1U << (n - 1);
    std::uint64_t total = 0;
    for (unsigned d = 1; d <= len; d *= 2) {
        const std::uint64_t phi = d == 1 ? 1 : d / 2;
        total += phi * (std::uint64_t{1} << (len / d));
    }
    return total / len;
}

InducedDegree degree_single(const EqFn& f, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("generator degree must be >= 1");
    const Subgroup h = stabilizer(f);
    if (f.is_constant_b()) return InducedDegree(RealRep(h));
    const Subgroup c2 = Subgroup::make(1, f.n());
    const RealRep base = RealRep::trivial(c2, i + 1) + RealRep::sign(c2, i);  // i rho_2 + 1
    const std::int64_t mult = f.preimage_a_size() / h.order();
    return InducedDegree(induce(base, h) * mult);
}

Subgroup stabilizer_seq(const EqFnSeq& fs) {
    Subgroup h = Subgroup::whole(fs.n());
    for (const EqFn& f : fs.entries()) h = std::min(h, stabilizer(f));
    return h;
}

InducedDegree degree_seq(const EqFnSeq& fs, const DegreeList& degrees) {
    const Subgroup h = stabilizer_seq(fs);
    RealRep total(h);
    int slot = 0;
    for (const EqFn& f : fs.entries()) {
        ++slot;
        if (f.is_constant_b()) continue;
        total += restrict(degree_single(f, degrees(slot)).rep, h);
    }
    return InducedDegree(std::move(total));
}

OrbitRecord<EqFnSeq> canonical_orbit(const EqFnSeq& fs) {
    const int len = 1 << (fs.n() - 1);
    EqFnSeq best = fs;
    for (int r = 1; r < len; ++r) {
        EqFnSeq cand = fs.rotate(r);
        if (cand < best) best = std::move(cand);
    }
    const Subgroup h = stabilizer_seq(fs);
    const std::int64_t size = (std::int64_t{1} << fs.n()) / h.order();
    return OrbitRecord<EqFnSeq>{std::move(best), h, size};
}

}  // namespace eqsteenrod
