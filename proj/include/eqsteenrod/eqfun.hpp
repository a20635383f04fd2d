#pragma once

// C_2-equivariant functions f: C_{2^n} -> {a, b} and finitely supported
// sequences of them.
//
// The target carries the trivial action, so f is constant on C_2-cosets and
// is stored as a word of length L = 2^{n-1} on G/C_2. Position j holds the
// value on the coset g^j C_2, and g acts by cyclic rotation.

#include <compare>
#include <cstdint>
#include <functional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "eqsteenrod/rep_ring.hpp"

namespace eqsteenrod {

class SizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxEqFnExponent = 6;

/// Throws SizeError unless 1 <= n <= kMaxEqFnExponent.
void require_eqfn_exponent(int n);

class EqFn {
public:
    /// Bit j of `a_mask` is set iff f takes the value a on g^j C_2.
    EqFn(int n, std::uint32_t a_mask);

    /// Parses a word over {a, b}; its length must be 2^{n-1} for some n.
    static EqFn parse(std::string_view word);
    static EqFn constant_a(int n);
    static EqFn constant_b(int n);
    /// The function whose word has lexicographic rank `rank` among all
    /// words of length 2^{n-1} (a < b).
    static EqFn from_lex_rank(int n, std::uint64_t rank);

    int n() const { return n_; }
    int length() const { return 1 << (n_ - 1); }
    std::uint32_t a_mask() const { return mask_; }
    bool is_a(int position) const { return (mask_ >> position) & 1U; }
    int a_positions() const;
    /// |f^{-1}(a)| as a subset of G: two group elements per coset.
    std::int64_t preimage_a_size() const { return 2 * a_positions(); }
    bool is_constant_b() const { return mask_ == 0; }
    bool is_constant_a() const { return mask_ == full_mask(); }

    /// (g^r . f)(x) = f(g^{-r} x).
    EqFn rotate(std::int64_t r) const;
    /// Lexicographic rank of the word (a < b).
    std::uint64_t lex_rank() const;

    std::string to_string() const;

    friend bool operator==(const EqFn&, const EqFn&) = default;
    friend std::strong_ordering operator<=>(const EqFn& x, const EqFn& y);

private:
    std::uint32_t full_mask() const;

    int n_;
    std::uint32_t mask_;
};

/// Lazy range of all 2^{2^{n-1}} functions in lexicographic order.
inline auto enumerate_eqfns(int n) {
    require_eqfn_exponent(n);
    const std::uint64_t count = std::uint64_t{1} << (1U << (n - 1));
    return std::views::iota(std::uint64_t{0}, count) |
           std::views::transform([n](std::uint64_t r) { return EqFn::from_lex_rank(n, r); });
}

/// H_f: the largest C_{2^k} fixing f. Always contains C_2.
Subgroup stabilizer(const EqFn& f);

/// Generator degrees d_i for the slots of a sequence.
class DegreeList {
public:
    enum class Style { mu, bp, explicit_list };

    /// d_i = i.
    static DegreeList mu() { return DegreeList(Style::mu, {}); }
    /// d_i = 2^i - 1.
    static DegreeList bp() { return DegreeList(Style::bp, {}); }
    /// d_i = degrees[i-1]; indices past the end are rejected.
    static DegreeList explicit_degrees(std::vector<std::int64_t> degrees);

    Style style() const { return style_; }
    /// d_i for i >= 1.
    std::int64_t operator()(int i) const;
    /// Largest index covered (explicit lists only); 0 means unbounded.
    int size_bound() const { return style_ == Style::explicit_list ? static_cast<int>(degrees_.size()) : 0; }

    friend bool operator==(const DegreeList&, const DegreeList&) = default;

private:
    DegreeList(Style s, std::vector<std::int64_t> d) : style_(s), degrees_(std::move(d)) {}

    Style style_;
    std::vector<std::int64_t> degrees_;
};

/// A sequence (f_1, ..., f_N) with f_i constant at b for i > N. Trailing
/// constant-b entries are trimmed on construction.
class EqFnSeq {
public:
    explicit EqFnSeq(int n, std::vector<EqFn> entries = {});
    static EqFnSeq parse(int n, const std::vector<std::string>& words);

    int n() const { return n_; }
    const std::vector<EqFn>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    /// f_i for i >= 1 (constant b beyond the stored prefix).
    EqFn entry(int i) const;

    EqFnSeq rotate(std::int64_t r) const;
    std::vector<std::string> words() const;

    friend bool operator==(const EqFnSeq&, const EqFnSeq&) = default;
    /// Entrywise lexicographic (sequences in one orbit have equal length).
    friend std::strong_ordering operator<=>(const EqFnSeq& x, const EqFnSeq& y);

private:
    int n_;
    std::vector<EqFn> entries_;
};

template <class Rep>
struct OrbitRecord {
    Rep representative;  ///< lexicographically minimal rotation
    Subgroup stabilizer;
    std::int64_t orbit_size;
};

/// One record per G-orbit of EqFn, in lexicographic order of representative.
std::vector<OrbitRecord<EqFn>> orbits(int n);

/// Streams the orbit records to `visit` without materialising them.
void for_each_orbit(int n, const std::function<void(const OrbitRecord<EqFn>&)>& visit);

/// Binary necklace count (1/L) sum_{d | L} phi(d) 2^{L/d} for L = 2^{n-1}.
std::uint64_t necklace_count(int n);

/// ||f_i|| = (|f^{-1}(a)|/|H_f|) Ind_{C_2}^{H_f}(i rho_2 + 1) at level H_f.
InducedDegree degree_single(const EqFn& f, std::int64_t i);

/// Intersection of the entry stabilizers; G for the empty sequence.
Subgroup stabilizer_seq(const EqFnSeq& fs);

/// ||f|| = sum_i Res^{H_{f_i}}_{H_f} ||f_i|| with slot i using degree d_i.
InducedDegree degree_seq(const EqFnSeq& fs, const DegreeList& degrees = DegreeList::mu());

/// Lexicographically minimal rotation of a sequence and its orbit data.
OrbitRecord<EqFnSeq> canonical_orbit(const EqFnSeq& fs);

}  // namespace eqsteenrod
