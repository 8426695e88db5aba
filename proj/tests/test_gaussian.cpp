#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "hpt/gaussian.hpp"

using namespace hpt;
using gauss::Element;
using gauss::Polynomial;

namespace {

// Quadrature oracle for E(x^n) against the standard Gaussian weight: the
// trapezoid rule converges spectrally for entire integrands with decaying
// tails, so a modest step already gives 12+ digits.
double moment_by_quadrature(int n) {
    const double lo = -16.0, hi = 16.0, h = 0.005;
    long double sum = 0.0L;
    const long double norm = 1.0L / std::sqrt(2.0L * 3.14159265358979323846264338328L);
    for (double x = lo; x <= hi; x += h) {
        long double w = std::exp((long double)(-0.5 * x * x));
        sum += std::pow((long double)x, n) * w;
    }
    return static_cast<double>(sum * h * norm);
}

hpt::int128 double_factorial(int n) {  // (n)!! for odd n, 1 for n <= 0
    hpt::int128 v = 1;
    for (int m = n; m >= 1; m -= 2) v *= m;
    return v;
}

}  // namespace

TEST_CASE("delta acts by g' - x g and kills 0-forms") {
    Element eta;  // 0 + 1*eta
    eta.g = Polynomial::monomial(0);
    Element d = gauss::delta(eta);
    CHECK(d.f == Polynomial::monomial(1, Rational(-1)));  // -x
    CHECK(d.g.is_zero());

    Element xeta;
    xeta.g = Polynomial::monomial(1);
    Element d2 = gauss::delta(xeta);  // 1 - x^2
    Polynomial expect = Polynomial::monomial(0) - Polynomial::monomial(2);
    CHECK(d2.f == expect);

    Element pure;
    pure.f = Polynomial::monomial(3);
    CHECK(gauss::delta(pure).f.is_zero());
    CHECK(gauss::delta(pure).g.is_zero());
}

TEST_CASE("moments through the exactness recursion") {
    CHECK(gauss::moment(0) == Rational(1));
    CHECK(gauss::moment(1) == Rational(0));
    CHECK(gauss::moment(2) == Rational(1));
    CHECK(gauss::moment(8) == Rational(105));
    CHECK(moment_by_quadrature(8) == doctest::Approx(105.0).epsilon(1e-12));

    for (int k = 0; k <= 20; ++k) {
        CHECK(gauss::moment(2 * k) == Rational::from_int128(double_factorial(2 * k - 1)));
        CHECK(gauss::moment(2 * k + 1).is_zero());
    }
    for (int k = 1; k <= 8; ++k) {
        double exact = gauss::moment(2 * k).to_double();
        CHECK(moment_by_quadrature(2 * k) == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("expectation by linearity over moments") {
    // 3x^2 - 1 -> 2
    Polynomial f = Polynomial::monomial(2, Rational(3)) - Polynomial::monomial(0);
    CHECK(gauss::expectation(f) == Rational(2));
    CHECK(moment_by_quadrature(2) * 3 - 1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gauss::expectation(Polynomial::monomial(3)).is_zero());
    CHECK(std::abs(moment_by_quadrature(3)) < 1e-12);
    CHECK(gauss::expectation(Polynomial::monomial(0)) == Rational(1));
}

TEST_CASE("expectation vanishes on exact forms up to degree 40") {
    for (int d = 0; d <= 40; ++d) {
        Element a;
        a.g = Polynomial::monomial(d);
        CHECK(gauss::expectation(gauss::delta(a).f).is_zero());
    }
    // Random small-integer polynomials of degree 40.
    uint64_t state = 2024;
    auto next = [&]() { state = state * 6364136223846793005ULL + 1; return state >> 33; };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> coeff;
        for (int i = 0; i <= 40; ++i)
            coeff.emplace_back(static_cast<long long>(next() % 19) - 9);
        Element a;
        a.g = Polynomial(std::move(coeff));
        CHECK(gauss::expectation(gauss::delta(a).f).is_zero());
    }
}

namespace {

// Polynomial times c(x)^k where c = (2pi)^{-1/2} e^{-x^2/2}; enough structure
// to run the star-d-star route symbolically: d(p c^k) = (p' - k x p) c^k dx.
struct WeightedPoly {
    Polynomial p;
    int cpow = 0;
};

}  // namespace

TEST_CASE("delta agrees with the star-d-star route through the weighted basis") {
    // f eta = (f c) dmu, so star(f eta) = f c; then d and one more star
    // divides out dmu.  Sign (-1)^{n i + 1} = +1 for n = i = 1.
    for (int d = 0; d <= 10; ++d) {
        Polynomial f = Polynomial::monomial(d);
        WeightedPoly starred{f, 1};
        Polynomial after_d = starred.p.derivative() -
                             Polynomial::monomial(1, Rational(starred.cpow)) * starred.p;
        // after_d c dx = after_d dmu, so the final star returns after_d.
        Element viaformula;
        viaformula.g = f;
        CHECK(gauss::delta(viaformula).f == after_d);
    }
}
