#include "hpt/gaussian.hpp"

#include <stdexcept>

namespace hpt::gauss {

Polynomial Polynomial::monomial(int degree, const Rational& c) {
    std::vector<Rational> coeff(static_cast<size_t>(degree) + 1, Rational(0));
    coeff.back() = c;
    return Polynomial(std::move(coeff));
}

Rational Polynomial::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return Rational(0);
    return coeff_[static_cast<size_t>(i)];
}

Polynomial Polynomial::derivative() const {
    if (coeff_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeff_.size() - 1);
    for (size_t i = 1; i < coeff_.size(); ++i)
        out[i - 1] = coeff_[i] * Rational(static_cast<long long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x() const {
    if (coeff_.empty()) return Polynomial();
    std::vector<Rational> out(coeff_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) out[i + 1] = coeff_[i];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
    for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i)
        for (size_t j = 0; j < b.coeff_.size(); ++j) out[i + j] += a.coeff_[i] * b.coeff_[j];
    return Polynomial(std::move(out));
}

void Polynomial::trim() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

Element delta(const Element& a) {
    Element out;
    out.f = a.g.derivative() - a.g.times_x();
    return out;
}

Rational moment(int n) {
    if (n < 0) throw std::invalid_argument("moment: n must be nonnegative");
    if (n % 2 == 1) return Rational(0);
    // E(x^{2k}) = (2k-1)!! from 0 = E(delta(x^{n-1} eta)).
    Rational value(1);
    for (int m = 2; m <= n; m += 2) value *= Rational(m - 1);
    return value;
}

Rational expectation(const Polynomial& f) {
    Rational total(0);
    const auto& c = f.coefficients();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        total += c[i] * moment(static_cast<int>(i));
    }
    return total;
}

}  // namespace hpt::gauss
