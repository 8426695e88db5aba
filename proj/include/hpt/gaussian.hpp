// Exact homotopy-Gaussian calculator on the real line.
//
// Elements are f + g*eta with f, g rational-coefficient polynomials in x and
// eta the weighted basis 1-form; the codifferential acts by
// delta(g*eta) = g' - x*g and annihilates 0-forms.  Expectations of
// polynomials follow from E vanishing on delta-exact forms:
// E(x^n) = (n-1) E(x^{n-2}), E(1) = 1, E(x) = 0.

#pragma once

#include <vector>

#include "hpt/rational.hpp"

namespace hpt::gauss {

// Dense polynomial with exact rational coefficients, coeff[i] on x^i.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeff) : coeff_(std::move(coeff)) { trim(); }
    static Polynomial monomial(int degree, const Rational& c = Rational(1));

    const std::vector<Rational>& coefficients() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    Rational coefficient(int i) const;

    Polynomial derivative() const;
    Polynomial times_x() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeff_ == b.coeff_;
    }

  private:
    void trim();
    std::vector<Rational> coeff_;
};

struct Element {
    Polynomial f;  // 0-form part
    Polynomial g;  // coefficient of eta
};

// delta(f + g*eta) = g' - x*g.
Element delta(const Element& a);

// E(x^n) through the delta-exactness recursion; exact.
Rational moment(int n);

// E(f) for a pure 0-form element, by linearity over moments.
Rational expectation(const Polynomial& f);

}  // namespace hpt::gauss
