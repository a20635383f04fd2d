#include "eqsteenrod/rep_ring.hpp"

#include <algorithm>
#include <sstream>

namespace eqsteenrod {

namespace {

std::int64_t lambda_count(int k) { return k >= 2 ? (std::int64_t{1} << (k - 1)) - 1 : 0; }

}  // namespace

Subgroup Subgroup::make(int k, int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("ambient exponent n out of range: " + std::to_string(n));
    if (k < 0 || k > n) {
        throw std::invalid_argument("subgroup exponent " + std::to_string(k) + " not in [0, " + std::to_string(n) + "]");
    }
    return Subgroup{k, n};
}

std::string Subgroup::name() const { return "C" + std::to_string(order()); }

void require_contained(const Subgroup& sub, const Subgroup& super) {
    if (!super.contains(sub)) {
        throw ContainmentError(sub.name() + " is not a subgroup of " + super.name() + " (ambient C" +
                               std::to_string(std::int64_t{1} << super.n) + ")");
    }
}

RealRep::RealRep(Subgroup level) : level_(level), lambda_(static_cast<std::size_t>(lambda_count(level.k)), 0) {}

RealRep::RealRep(Subgroup level, Mult triv, Mult sign, std::vector<Mult> lambda)
    : level_(level), triv_(triv), sign_(sign), lambda_(std::move(lambda)) {
    if (static_cast<std::int64_t>(lambda_.size()) != lambda_count(level.k)) {
        throw std::invalid_argument("lambda list has wrong length for " + level.name());
    }
    if (level.k == 0 && sign != 0) throw std::invalid_argument("C1 has no sign representation");
}

RealRep RealRep::trivial(Subgroup level, Mult m) {
    RealRep r(level);
    r.triv_ = m;
    return r;
}

RealRep RealRep::sign(Subgroup level, Mult m) {
    if (level.k == 0) throw std::invalid_argument("C1 has no sign representation");
    RealRep r(level);
    r.sign_ = m;
    return r;
}

RealRep RealRep::lambda(Subgroup level, std::int64_t j, Mult m) {
    const std::int64_t order = level.order();
    std::vector<Mult> c(static_cast<std::size_t>(order), 0);
    const std::int64_t t = ((j % order) + order) % order;
    c[static_cast<std::size_t>(t)] += m;
    c[static_cast<std::size_t>((order - t) % order)] += m;
    return from_complex(level, c);
}

std::vector<RealRep::Mult> RealRep::complex_multiplicities() const {
    const std::int64_t order = level_.order();
    std::vector<Mult> c(static_cast<std::size_t>(order), 0);
    c[0] = triv_;
    if (level_.k >= 1) c[static_cast<std::size_t>(order / 2)] = sign_;
    for (std::int64_t j = 1; j <= lambda_count(level_.k); ++j) {
        const Mult m = lambda_[static_cast<std::size_t>(j - 1)];
        c[static_cast<std::size_t>(j)] = m;
        c[static_cast<std::size_t>(order - j)] = m;
    }
    return c;
}

RealRep RealRep::from_complex(Subgroup level, std::span<const Mult> c) {
    const std::int64_t order = level.order();
    if (static_cast<std::int64_t>(c.size()) != order) throw std::invalid_argument("character vector has wrong length");
    for (std::int64_t t = 1; t < order; ++t) {
        if (c[static_cast<std::size_t>(t)] != c[static_cast<std::size_t>(order - t)]) {
            throw std::invalid_argument("character vector is not real (c[t] != c[-t])");
        }
    }
    RealRep r(level);
    r.triv_ = c[0];
    if (level.k >= 1) r.sign_ = c[static_cast<std::size_t>(order / 2)];
    for (std::int64_t j = 1; j <= lambda_count(level.k); ++j) {
        r.lambda_[static_cast<std::size_t>(j - 1)] = c[static_cast<std::size_t>(j)];
    }
    return r;
}

RealRep::Mult RealRep::lambda_mult(std::int64_t j) const {
    if (j < 1 || j > lambda_count(level_.k)) throw std::out_of_range("lambda index out of range for " + level_.name());
    return lambda_[static_cast<std::size_t>(j - 1)];
}

RealRep::Mult RealRep::dim() const {
    Mult d = triv_ + sign_;
    for (Mult m : lambda_) d += 2 * m;
    return d;
}

bool RealRep::is_zero() const {
    return triv_ == 0 && sign_ == 0 && std::ranges::all_of(lambda_, [](Mult m) { return m == 0; });
}

bool RealRep::is_honest() const {
    return triv_ >= 0 && sign_ >= 0 && std::ranges::all_of(lambda_, [](Mult m) { return m >= 0; });
}

void RealRep::require_same_level(const RealRep& other) const {
    if (other.level_ != level_) {
        throw std::invalid_argument("representations live at different levels: " + level_.name() + " vs " +
                                    other.level_.name());
    }
}

RealRep& RealRep::operator+=(const RealRep& other) {
    require_same_level(other);
    triv_ += other.triv_;
    sign_ += other.sign_;
    for (std::size_t j = 0; j < lambda_.size(); ++j) lambda_[j] += other.lambda_[j];
    return *this;
}

RealRep& RealRep::operator-=(const RealRep& other) {
    require_same_level(other);
    triv_ -= other.triv_;
    sign_ -= other.sign_;
    for (std::size_t j = 0; j < lambda_.size(); ++j) lambda_[j] -= other.lambda_[j];
    return *this;
}

RealRep& RealRep::operator*=(Mult scalar) {
    triv_ *= scalar;
    sign_ *= scalar;
    for (Mult& m : lambda_) m *= scalar;
    return *this;
}

RealRep operator*(const RealRep& a, const RealRep& b) {
    a.require_same_level(b);
    const auto ca = a.complex_multiplicities();
    const auto cb = b.complex_multiplicities();
    const std::size_t order = ca.size();
    std::vector<RealRep::Mult> c(order, 0);
    for (std::size_t s = 0; s < order; ++s) {
        if (ca[s] == 0) continue;
        for (std::size_t t = 0; t < order; ++t) c[(s + t) % order] += ca[s] * cb[t];
    }
    return RealRep::from_complex(a.level(), c);
}

std::string RealRep::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](Mult m, const std::string& sym) {
        if (m == 0) return;
        if (!first) out << (m < 0 ? " - " : " + ");
        else if (m < 0) out << "-";
        const Mult a = m < 0 ? -m : m;
        if (sym.empty()) out << a;
        else {
            if (a != 1) out << a;
            out << sym;
        }
        first = false;
    };
    term(triv_, "");
    term(sign_, "σ");
    for (std::size_t j = 0; j < lambda_.size(); ++j) term(lambda_[j], "λ" + std::to_string(j + 1));
    if (first) return "0";
    return out.str();
}

RealRep regular(Subgroup h) {
    std::vector<RealRep::Mult> c(static_cast<std::size_t>(h.order()), 1);
    return RealRep::from_complex(h, c);
}

// Frobenius reciprocity on cyclic groups: the character zeta^s of K is
// induced to the sum of the characters zeta^t of H with t = s mod |K|.
RealRep induce(const RealRep& v, Subgroup h) {
    require_contained(v.level(), h);
    const auto ck = v.complex_multiplicities();
    const std::size_t order_k = ck.size();
    std::vector<RealRep::Mult> c(static_cast<std::size_t>(h.order()));
    for (std::size_t t = 0; t < c.size(); ++t) c[t] = ck[t % order_k];
    return RealRep::from_complex(h, c);
}

// The generator of C_{2^j} <= C_{2^k} is g^{2^{k-j}}, on which zeta^t takes
// the value of the C_{2^j} character with index t mod 2^j.
RealRep restrict(const RealRep& v, Subgroup k) {
    require_contained(k, v.level());
    const auto ch = v.complex_multiplicities();
    std::vector<RealRep::Mult> c(static_cast<std::size_t>(k.order()), 0);
    for (std::size_t t = 0; t < ch.size(); ++t) c[t % c.size()] += ch[t];
    return RealRep::from_complex(k, c);
}

RealRep::Mult fixed_dim(const RealRep& v, Subgroup k) { return restrict(v, k).triv(); }

}  // namespace eqsteenrod
