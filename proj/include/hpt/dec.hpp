// Exterior calculus operators on the flat 3-torus.
//
// Differentiation is spectral (discrete Fourier transform), exact to
// round-off for band-limited inputs.  Sign conventions:
//   codifferential  delta = (-1)^(3k+1) * star d star   on k-forms,
// which makes div X = delta(flat(X)) and the adjointness identity read
// <d a, b> = -<a, delta b> in L^2.

#pragma once

#include <cstdint>

#include "hpt/form.hpp"

namespace hpt {

Form exterior_derivative(const Form& w);   // k=3 -> DegreeOverflow
Form hodge_star(const Form& w);            // frame permutation, exact
Form codifferential(const Form& w);        // 0-forms map to zero
Form wedge(const Form& a, const Form& b);  // j+k > 3 -> DegreeOverflow

Form flat(const VectorField& u);
VectorField sharp(const Form& w);  // w must be a 1-form

VectorField gradient(const Form& f);       // (df)#
Form divergence(const VectorField& u);     // delta(u_flat), a 0-form
VectorField curl(const VectorField& u);    // (star d u_flat)#
VectorField cross(const VectorField& u, const VectorField& v);  // (star(u_flat ^ v_flat))#

double integrate(const Form& w);    // 3-forms only: grid sum * cell volume
double expectation(const Form& w);  // mean for 0-forms, 0 for k >= 1

Form harmonic_projection(const Form& w);  // constant-coefficient part

// Solves delta(d phi) = h for a zero-mean 0-form h; returns zero-mean phi.
// With the sign convention above delta d is the flat Laplacian, so every
// Fourier mode divides by -|k|^2.
Form poisson_solve(const Form& h, double tol_mean = 1e-10);

// Sup-norm of the defect in the second-order (seven-term) identity for the
// codifferential against the wedge product.  Wedges that overflow degree 3
// contribute zero.
double bv_seven_term_residual(const Form& a, const Form& b, const Form& c);

// Deterministic pseudo-random form with Fourier support |k|_inf <= kmax.
// With divergence_free set (1-forms only) coefficients are projected onto
// ker(delta) mode by mode.
Form random_bandlimited(const Grid& grid, int degree, int kmax, uint64_t seed,
                        bool divergence_free = false);

// Inner products of the flat metric, integrated over the torus.
double l2_inner(const Form& a, const Form& b);

}  // namespace hpt
