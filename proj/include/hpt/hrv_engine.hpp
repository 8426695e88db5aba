// Builders and checkers for collections and homotopies of homotopy random
// variables, the fluid-equation identifications, homotopy statistics,
// helicity, and the constructive density homotopy.
//
// A parameter-ring choice pairs with a fluid equation:
//   R           + (t,dt)  : mass equation           (f, X)
//   R[eps]      + (t,dt)  : unit-density vorticity  (f, X, V, pi)
//   R[eps,deps] + (t,dt)  : compressible Euler      (f, X, V, pi, sigma, Phi, Psi)
// Residual tables are keyed by the equation each monomial coefficient
// carries: dt -> mass, eps -> div-free, deps -> V-equation, dt eps ->
// vorticity, eps deps -> trivial-equation, deps^2 -> Psi-equation,
// dt deps -> momentum, dt eps deps -> helicity-equation.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpt/decorated_form.hpp"

namespace hpt {

enum class LemmaKind { mass, vorticity, euler };

struct FluidState {
    Grid grid;
    std::vector<double> times;
    std::vector<Form> rho;       // positive 0-forms, one per sample
    std::vector<VectorField> u;  // velocity samples
    std::vector<Form> p;         // pressure 0-forms, one per sample

    size_t sample_count() const { return times.size(); }
    void validate() const;
};

struct HomotopyData {
    RingSpec::Name ring = RingSpec::Name::reals;
    Grid grid;
    std::vector<double> times;

    // Slot degrees: f 0, X 1, V 1, pi 2, sigma 2, Phi 3, Psi 3.
    std::optional<FormFamily> f, X, V, pi, sigma, Phi, Psi;

    DecoratedForm element() const;  // f + X dt + V eps + pi dt eps + ...
};

struct CollectionSpec {
    RingSpec::Name ring;
    Grid grid;
    Form f;
    std::optional<Form> V;      // required for R[eps]; derived for R[eps,deps]
    std::optional<Form> sigma;  // required for R[eps,deps]
    std::optional<Form> Psi;    // derived when absent

    CollectionSpec(RingSpec::Name ring_name, const Grid& g, Form scalar)
        : ring(ring_name), grid(g), f(std::move(scalar)) {}

    DecoratedForm element() const;
};

struct ResidualReport {
    double tolerance = 0.0;
    bool pass = false;
    std::vector<double> times;
    // equation name -> sup-norm residual per time sample
    std::map<std::string, std::vector<double>> residuals;

    double max_residual(const std::string& equation) const;
    double worst() const;
};

struct StatisticsReport {
    std::vector<double> times;
    // monomial -> E per sample; only degree-0 coefficients contribute.
    std::map<std::string, std::vector<double>> real_statistics;
    // monomial -> per sample -> coefficients on the harmonic basis
    // {1, dx, dy, dz, dy^dz, dz^dx, dx^dy, dV}.
    std::map<std::string, std::vector<std::vector<double>>> cohomology;
    std::vector<double> mass;  // E(rho) per sample
};

std::string equation_name(const RingSpec& ring, const Monomial& m);

ResidualReport collection_residual(const CollectionSpec& c, double tol);
ResidualReport collection_residual(const HomotopyData& h, double tol);

HomotopyData build_mass_homotopy(const FluidState& s);
HomotopyData build_vorticity_homotopy(const Grid& grid, const std::vector<double>& times,
                                      const std::vector<VectorField>& u);
HomotopyData build_euler_homotopy(const FluidState& s);

// Sup-norm deviation of the named lemma constraints, maximized over samples.
std::map<std::string, double> constraint_check(const HomotopyData& h, LemmaKind lemma);

StatisticsReport statistics(const HomotopyData& h);
StatisticsReport statistics(const CollectionSpec& c);
StatisticsReport cohomology_statistics(const HomotopyData& h);
StatisticsReport cohomology_statistics(const CollectionSpec& c);

// integral of Psi per sample (un-normalized torus volume).
std::vector<double> helicity(const HomotopyData& h);

// Given equal-mass log-densities f0, f1, the explicit homotopy
//   f(t) = log((1-t) e^{f0} + t e^{f1}),  X(t) = -Y / ((1-t) e^{f0} + t e^{f1})
// with delta(Y) = e^{f1} - e^{f0} produced by a Poisson solve.
HomotopyData construct_density_homotopy(const Form& f0, const Form& f1,
                                        int samples = 11, double tol_mass = 1e-10);

// Joint moments E(f_{i1} ... f_{ik}) of 0-forms up to total order
// `max_order`, read off the moment generating element with degree-zero
// markers; keys are marker monomials ("s1^2 s2", ...).
std::map<std::string, double> joint_moments(const Grid& grid, const std::vector<Form>& forms,
                                            int max_order = 4);

// delta-applied / time-differentiated residual identities tying the Euler
// equation set together; each entry should vanish identically.
std::map<std::string, double> euler_redundancy_residuals(const HomotopyData& h);

}  // namespace hpt
