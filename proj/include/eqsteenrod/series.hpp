#pragma once

// Truncated integer power series in one variable t.

#include <cstdint>
#include <string>
#include <vector>

namespace eqsteenrod {

class PoincareSeries {
public:
    using Coeff = std::int64_t;

    /// The zero series, truncated above degree `cutoff`.
    explicit PoincareSeries(int cutoff);

    static PoincareSeries one(int cutoff);
    /// c * t^degree (zero if degree > cutoff).
    static PoincareSeries monomial(int cutoff, int degree, Coeff c = 1);
    /// (1 + t^degree)^power.
    static PoincareSeries binomial_power(int cutoff, int degree, int power);
    /// 1 / (1 - t^degree), degree >= 1.
    static PoincareSeries geometric(int cutoff, int degree);

    int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff operator[](int degree) const;
    void add_term(int degree, Coeff c = 1);
    const std::vector<Coeff>& coefficients() const { return coeffs_; }
    bool has_nonnegative_coefficients() const;

    PoincareSeries& operator+=(const PoincareSeries& other);
    PoincareSeries& operator*=(const PoincareSeries& other);
    friend PoincareSeries operator+(PoincareSeries a, const PoincareSeries& b) { return a += b; }
    friend PoincareSeries operator*(PoincareSeries a, const PoincareSeries& b) { return a *= b; }

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

    /// e.g. "1 + 2t^3 + t^6".
    std::string to_string() const;

private:
    std::vector<Coeff> coeffs_;
};

}  // namespace eqsteenrod
