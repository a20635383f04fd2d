#include "eqsteenrod/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqsteenrod {

PoincareSeries::PoincareSeries(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("series cutoff must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, 0);
}

PoincareSeries PoincareSeries::one(int cutoff) { return monomial(cutoff, 0); }

PoincareSeries PoincareSeries::monomial(int cutoff, int degree, Coeff c) {
    PoincareSeries s(cutoff);
    s.add_term(degree, c);
    return s;
}

PoincareSeries PoincareSeries::binomial_power(int cutoff, int degree, int power) {
    PoincareSeries factor = one(cutoff);
    factor.add_term(degree);
    PoincareSeries out = one(cutoff);
    for (int p = 0; p < power; ++p) out *= factor;
    return out;
}

PoincareSeries PoincareSeries::geometric(int cutoff, int degree) {
    if (degree < 1) throw std::invalid_argument("geometric series needs a positive degree");
    PoincareSeries s(cutoff);
    for (int d = 0; d <= cutoff; d += degree) s.coeffs_[static_cast<std::size_t>(d)] = 1;
    return s;
}

PoincareSeries::Coeff PoincareSeries::operator[](int degree) const {
    if (degree < 0 || degree > cutoff()) return 0;
    return coeffs_[static_cast<std::size_t>(degree)];
}

void PoincareSeries::add_term(int degree, Coeff c) {
    if (degree < 0) throw std::invalid_argument("negative degree in a Poincaré series");
    if (degree <= cutoff()) coeffs_[static_cast<std::size_t>(degree)] += c;
}

bool PoincareSeries::has_nonnegative_coefficients() const {
    return std::ranges::all_of(coeffs_, [](Coeff c) { return c >= 0; });
}

PoincareSeries& PoincareSeries::operator+=(const PoincareSeries& other) {
    if (other.cutoff() != cutoff()) throw std::invalid_argument("series cutoffs differ");
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
    return *this;
}

PoincareSeries& PoincareSeries::operator*=(const PoincareSeries& other) {
    if (other.cutoff() != cutoff()) throw std::invalid_argument("series cutoffs differ");
    std::vector<Coeff> out(coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

std::string PoincareSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Coeff c = coeffs_[d];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        const Coeff a = c < 0 ? -c : c;
        if (d == 0) out << a;
        else {
            if (a != 1) out << a;
            out << "t";
            if (d != 1) out << "^" << d;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

}  // namespace eqsteenrod
