// Closed-form fluid states for exercising the lemma checkers, plus seeded
// random generators for property tests.  Every shipped field has Fourier
// support at wavenumber <= 2.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "hpt/hrv_engine.hpp"

namespace hpt {

// amplitude * cos(k . x + phase)
struct TrigMode {
    double amplitude = 0.0;
    std::array<int, 3> wavevector{0, 0, 0};
    double phase = 0.0;
};

// offset + sum of cosine modes; evaluated exactly at grid points.
struct Profile {
    double offset = 1.0;
    std::vector<TrigMode> modes;

    double eval(double x, double y, double z) const;
    int max_wavenumber() const;
};

struct AnalyticField {
    std::string name;
    std::function<FluidState(const Grid&, const std::vector<double>&)> realize;
};

// u = (A sin z + C cos y, B sin x + A cos z, C sin y + B cos x), rho = 1,
// p = -|u|^2/2; steady Beltrami solution of the Euler equations.
AnalyticField abc_flow(double A, double B, double C);

// u = (a sin y, 0, 0), rho = 1, p = 0; steady unit-density solution.
AnalyticField shear_flow(double amplitude);

// u = (sin x cos y, -cos x sin y, 0), rho = 1; the two-mode pressure
// p = c1 cos 2x + c2 cos 2y is fitted by least squares on the momentum
// residual and must drive it below `fit_tolerance`.
AnalyticField taylor_green_2d(double fit_tolerance = 1e-8);

// rho(x,t) = g(x - u0 t), u = u0, p = 0; exact time-dependent compressible
// solution (all gradient terms vanish).
AnalyticField transport_solution(const Profile& g, const std::array<double, 3>& u0);

// sharp of a seeded divergence-free random band-limited 1-form.
VectorField random_divfree(const Grid& grid, int kmax, uint64_t seed);

// Least-squares pressure coefficients for the Taylor-Green field on a grid;
// exposed for testing the fit against the closed form.
std::array<double, 2> taylor_green_pressure_fit(const Grid& grid);

}  // namespace hpt
