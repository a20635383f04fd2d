#pragma once

// Real representation rings of the subgroups of a cyclic 2-group C_{2^n}.
//
// Every subgroup of C_{2^n} is C_{2^k} for a unique 0 <= k <= n, and the
// lattice is a chain. A real representation of C_{2^k} is a sum of the
// trivial line, the sign line (k >= 1) and the rotation planes
// lambda_j, 1 <= j < 2^{k-1}, where the generator acts by rotation through
// 2*pi*j/2^k. Multiplicities are arbitrary integers, so virtual
// representations are first-class.
//
// Internally every computation goes through the complex character basis:
// a real representation is a vector c[t], t in Z/2^k, of multiplicities of
// the characters g -> zeta^t, symmetric under t -> -t. Restriction and
// induction are then index reductions, and nothing ever touches floating
// point.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqsteenrod {

class ContainmentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The subgroup C_{2^k} of the ambient group C_{2^n}.
struct Subgroup {
    int k = 0;
    int n = 1;

    /// Validates 0 <= k <= n and 1 <= n <= 30.
    static Subgroup make(int k, int n);
    static Subgroup whole(int n) { return make(n, n); }

    std::int64_t order() const { return std::int64_t{1} << k; }

    /// True when `other` is a subgroup of this one (same ambient group).
    bool contains(const Subgroup& other) const { return other.n == n && other.k <= k; }

    std::string name() const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Throws ContainmentError unless `sub` <= `super`.
void require_contained(const Subgroup& sub, const Subgroup& super);

class RealRep {
public:
    using Mult = std::int64_t;

    /// The zero representation at `level`.
    explicit RealRep(Subgroup level);

    /// Build from explicit multiplicities; `lambda` must have length
    /// max(0, 2^{k-1} - 1), and `sign` must be 0 when k = 0.
    RealRep(Subgroup level, Mult triv, Mult sign, std::vector<Mult> lambda);

    static RealRep trivial(Subgroup level, Mult m = 1);
    static RealRep sign(Subgroup level, Mult m = 1);
    /// lambda_j for any integer j, canonicalised: j is read mod 2^k,
    /// lambda_{-j} = lambda_j, lambda_0 = 2, lambda_{2^{k-1}} = 2 sigma.
    static RealRep lambda(Subgroup level, std::int64_t j, Mult m = 1);

    /// Complex character multiplicities c[t], t = 0..2^k-1.
    std::vector<Mult> complex_multiplicities() const;
    /// Inverse of complex_multiplicities(); throws std::invalid_argument if
    /// `c` is not symmetric under t -> -t.
    static RealRep from_complex(Subgroup level, std::span<const Mult> c);

    const Subgroup& level() const { return level_; }
    Mult triv() const { return triv_; }
    Mult sign_mult() const { return sign_; }
    /// Multiplicity of lambda_j for 1 <= j < 2^{k-1}.
    Mult lambda_mult(std::int64_t j) const;
    std::span<const Mult> lambdas() const { return lambda_; }

    Mult dim() const;
    bool is_zero() const;
    /// True when every multiplicity is nonnegative.
    bool is_honest() const;

    RealRep& operator+=(const RealRep& other);
    RealRep& operator-=(const RealRep& other);
    RealRep& operator*=(Mult scalar);

    friend RealRep operator+(RealRep a, const RealRep& b) { return a += b; }
    friend RealRep operator-(RealRep a, const RealRep& b) { return a -= b; }
    friend RealRep operator*(RealRep a, Mult s) { return a *= s; }
    friend RealRep operator*(Mult s, RealRep a) { return a *= s; }
    /// Tensor product.
    friend RealRep operator*(const RealRep& a, const RealRep& b);

    friend bool operator==(const RealRep&, const RealRep&) = default;

    /// Human-readable form, e.g. "2 + 2σ + λ1".
    std::string to_string() const;

private:
    void require_same_level(const RealRep& other) const;

    Subgroup level_;
    Mult triv_ = 0;
    Mult sign_ = 0;
    std::vector<Mult> lambda_;
};

/// rho_H: one copy of every complex character.
RealRep regular(Subgroup h);

/// Character-theoretic induction from V's level up to `h`.
RealRep induce(const RealRep& v, Subgroup h);

/// Restriction from V's level down to `k`.
RealRep restrict(const RealRep& v, Subgroup k);

/// Dimension of the K-fixed subspace of V.
RealRep::Mult fixed_dim(const RealRep& v, Subgroup k);

/// The extended grading G_+ ^_H S^V: a subgroup H with a (virtual)
/// representation of H.
struct InducedDegree {
    Subgroup from;
    RealRep rep;

    explicit InducedDegree(RealRep r) : from(r.level()), rep(std::move(r)) {}

    RealRep::Mult dim() const { return rep.dim(); }
    /// Fixed dimension at K <= H.
    RealRep::Mult fixed_dim(Subgroup k) const { return eqsteenrod::fixed_dim(rep, k); }

    friend bool operator==(const InducedDegree&, const InducedDegree&) = default;
};

}  // namespace eqsteenrod
