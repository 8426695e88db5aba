// Elements of Omega^*(M) tensor R: finite sums of ring monomials with form
// coefficients, optionally sampled in time.
//
// A term family holds either one Form (t-independent) or one Form per sample
// time.  The total differential is
//     delta(w (x) r) = delta_M(w) (x) r + (-1)^{deg w} w (x) d_R(r),
// where d_R picks up both the generator assignments and, for sampled
// families, a dt term with the time derivative evaluated by 4th-order
// finite differences.

#pragma once

#include <map>
#include <vector>

#include "hpt/dec.hpp"
#include "hpt/form.hpp"
#include "hpt/graded_ring.hpp"

namespace hpt {

using FormFamily = std::vector<Form>;

class DecoratedForm {
  public:
    DecoratedForm(RingHandle ring, const Grid& grid, std::vector<double> times = {});

    static DecoratedForm unit(RingHandle ring, const Grid& grid,
                              std::vector<double> times = {});

    const RingHandle& ring() const { return ring_; }
    const Grid& grid() const { return grid_; }
    const std::vector<double>& times() const { return times_; }
    size_t sample_count() const { return times_.empty() ? 1 : times_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, FormFamily>& terms() const { return terms_; }

    // Families must have size 1 (steady) or sample_count(); identically zero
    // families are dropped.
    void set_term(const Monomial& m, FormFamily family);
    void add_term(const Monomial& m, const FormFamily& family, double sign = 1.0);
    bool has_term(const Monomial& m) const { return terms_.count(m) != 0; }
    const FormFamily& term(const Monomial& m) const;

    // Total degree (form degree + monomial degree); throws DegreeError when
    // the element is zero or inhomogeneous.
    int total_degree() const;
    bool is_homogeneous() const;

    DecoratedForm& operator+=(const DecoratedForm& o);
    DecoratedForm scaled(double s) const;
    // Pointwise multiply (or divide) every coefficient by a 0-form family.
    DecoratedForm scaled_pointwise(const FormFamily& scalars, bool divide = false) const;

    double sup_norm() const;

  private:
    void check_family(const Monomial& m, const FormFamily& family) const;

    RingHandle ring_;
    Grid grid_;
    std::vector<double> times_;
    std::map<Monomial, FormFamily> terms_;
};

// Graded product: bilinear over wedge and the monomial product, with the
// Koszul sign (-1)^{deg r_a * deg w_b}; coefficients of form degree > 3 are
// genuinely zero and dropped.
DecoratedForm df_mul(const DecoratedForm& a, const DecoratedForm& b);

// Exponential of a total-degree-zero element; the scalar part exponentiates
// pointwise and the rest terminates by nilpotence and degree truncation.
DecoratedForm df_exp(const DecoratedForm& a);

// Termwise logarithm for elements with pointwise-positive scalar part.
DecoratedForm df_log(const DecoratedForm& a);

// Total differential delta_M (x) 1 + 1 (x) d_R.
DecoratedForm df_delta_total(const DecoratedForm& a);

// Per-monomial, per-sample sup norms of df_delta_total(a), materializing one
// output family at a time.
std::map<Monomial, std::vector<double>> delta_total_supnorms(const DecoratedForm& a);

// Stored coefficient of m, or the zero form of the degree forced by the
// element's total degree.  Monomials invalid in the ring are rejected.
Form coefficient_of(const DecoratedForm& a, const Monomial& m, size_t sample = 0);

// 4th-order time derivative of a sampled family (5-point stencils, one-sided
// at the ends); requires at least five uniformly spaced samples.
FormFamily family_time_derivative(const std::vector<double>& times, const FormFamily& family);

}  // namespace hpt
