// Graded-commutative parameter rings with Koszul signs.
//
// Supported rings are R = RR[t,dt], RR[eps][t,dt] and RR[eps,deps][t,dt],
// optionally extended by degree-zero statistics markers s1..sm.  Degrees:
// t 0, dt -1, eps -1, deps -2, s_i 0.  Odd-degree generators square to
// zero; t powers are truncated at a configurable order and marker words at
// total order 4.  The canonical generator order is (t, dt, eps, deps,
// s1, s2, ...); every monomial is kept normalized to it and reordering
// signs are charged to the coefficient.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hpt/errors.hpp"
#include "hpt/rational.hpp"

namespace hpt {

struct GradedVariable {
    std::string name;
    int degree = 0;
    bool nilpotent = false;  // true exactly for odd degree
};

class RingSpec;
using RingHandle = std::shared_ptr<const RingSpec>;

class RingSpec {
  public:
    enum class Name { reals, eps, eps_deps };

    static RingHandle reals(int t_truncation = 16);
    static RingHandle poly_eps(int t_truncation = 16);
    static RingHandle poly_eps_deps(int t_truncation = 16);
    // Base ring extended by degree-zero markers s1..sm (d_R s_i = 0),
    // truncated at total marker order `marker_truncation`.
    static RingHandle with_markers(Name base, int markers, int marker_truncation = 4,
                                   int t_truncation = 16);

    Name name() const { return name_; }
    const std::string& display_name() const { return display_; }
    int variable_count() const { return static_cast<int>(vars_.size()); }
    const GradedVariable& variable(int i) const { return vars_[static_cast<size_t>(i)]; }
    // Index of d_R(var i) among the generators, or -1 when d_R(var i) = 0.
    int differential_target(int i) const { return diff_[static_cast<size_t>(i)]; }

    int t_index() const { return 0; }
    int dt_index() const { return 1; }
    int t_truncation() const { return t_truncation_; }
    int marker_truncation() const { return marker_truncation_; }
    int marker_begin() const { return marker_begin_; }

    bool same(const RingSpec& other) const;

  private:
    RingSpec() = default;

    Name name_ = Name::reals;
    std::string display_;
    std::vector<GradedVariable> vars_;
    std::vector<int> diff_;
    int t_truncation_ = 16;
    int marker_truncation_ = 4;
    int marker_begin_ = 0;  // index of first marker; == variable_count() if none
};

// Exponent word over the ring's generators, always in canonical order.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int variable_count)
        : exp_(static_cast<size_t>(variable_count), 0) {}
    static Monomial unit(const RingSpec& ring) { return Monomial(ring.variable_count()); }
    static Monomial generator(const RingSpec& ring, int var, int power = 1);

    int exponent(int var) const { return exp_[static_cast<size_t>(var)]; }
    void set_exponent(int var, int e) { exp_[static_cast<size_t>(var)] = static_cast<uint8_t>(e); }
    bool is_unit() const;
    int size() const { return static_cast<int>(exp_.size()); }

    int degree(const RingSpec& ring) const;
    // Canonical-form validity: odd exponents <= 1, t and marker truncations.
    bool is_valid(const RingSpec& ring) const;
    std::string to_string(const RingSpec& ring) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  private:
    std::vector<uint8_t> exp_;
};

struct SignedMonomial {
    Monomial mono;
    int sign = 1;    // +1 or -1
    bool zero = false;  // nilpotent square or truncation hit
};

// Product of canonical monomials: Koszul reordering sign, nilpotent squares
// to zero, truncation drops.
SignedMonomial koszul_mul(const RingSpec& ring, const Monomial& a, const Monomial& b);

// Graded Leibniz expansion of d_R on a single monomial; integer coefficients
// carry both exponent factors and reordering signs.
std::vector<std::pair<Monomial, int>> monomial_differential(const RingSpec& ring,
                                                            const Monomial& m);

class RingElement {
  public:
    explicit RingElement(RingHandle ring) : ring_(std::move(ring)) {}
    static RingElement zero(RingHandle ring) { return RingElement(std::move(ring)); }
    static RingElement constant(RingHandle ring, const Rational& c);
    static RingElement generator(RingHandle ring, int var);

    const RingHandle& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    bool is_homogeneous() const;
    // Degree of a homogeneous nonzero element.
    int degree() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend bool operator==(const RingElement& a, const RingElement& b);

    RingElement scaled(const Rational& c) const;
    std::string to_string() const;

  private:
    void check_same_ring(const RingElement& o) const;

    RingHandle ring_;
    std::map<Monomial, Rational> terms_;

    friend RingElement ring_mul(const RingElement& a, const RingElement& b);
    friend RingElement ring_differential(const RingElement& a);
};

RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_differential(const RingElement& a);

}  // namespace hpt
