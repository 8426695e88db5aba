#include "hpt/graded_ring.hpp"

#include <sstream>

namespace hpt {

// -- RingSpec ----------------------------------------------------------

RingHandle RingSpec::reals(int t_truncation) {
    return with_markers(Name::reals, 0, 4, t_truncation);
}
RingHandle RingSpec::poly_eps(int t_truncation) {
    return with_markers(Name::eps, 0, 4, t_truncation);
}
RingHandle RingSpec::poly_eps_deps(int t_truncation) {
    return with_markers(Name::eps_deps, 0, 4, t_truncation);
}

RingHandle RingSpec::with_markers(Name base, int markers, int marker_truncation,
                                  int t_truncation) {
    auto r = std::shared_ptr<RingSpec>(new RingSpec());

    r->name_ = base;
    r->t_truncation_ = t_truncation;
    r->marker_truncation_ = marker_truncation;

    // Canonical order: t, dt, eps, deps, s1, s2, ...
    r->vars_.push_back({"t", 0, false});
    r->vars_.push_back({"dt", -1, true});
    r->diff_.push_back(1);   // d t = dt
    r->diff_.push_back(-1);  // d dt = 0
    if (base == Name::eps || base == Name::eps_deps) {
        r->vars_.push_back({"eps", -1, true});
        if (base == Name::eps_deps) {
            r->diff_.push_back(3);  // d eps = deps
            r->vars_.push_back({"deps", -2, false});
            r->diff_.push_back(-1);  // d deps = 0
        } else {
            r->diff_.push_back(-1);  // d eps = 0 in RR[eps]
        }
    }
    r->marker_begin_ = static_cast<int>(r->vars_.size());
    for (int i = 1; i <= markers; ++i) {
        r->vars_.push_back({"s" + std::to_string(i), 0, false});
        r->diff_.push_back(-1);
    }

    switch (base) {
        case Name::reals: r->display_ = "R"; break;
        case Name::eps: r->display_ = "R[eps]"; break;
        case Name::eps_deps: r->display_ = "R[eps,deps]"; break;
    }
    if (markers > 0) r->display_ += "[s1.." + std::to_string(markers) + "]";
    return r;
}

bool RingSpec::same(const RingSpec& other) const {
    if (this == &other) return true;
    if (name_ != other.name_ || vars_.size() != other.vars_.size()) return false;
    if (t_truncation_ != other.t_truncation_ ||
        marker_truncation_ != other.marker_truncation_)
        return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].degree != other.vars_[i].degree)
            return false;
    return true;
}

// -- Monomial ----------------------------------------------------------

Monomial Monomial::generator(const RingSpec& ring, int var, int power) {
    Monomial m(ring.variable_count());
    m.set_exponent(var, power);
    return m;
}

bool Monomial::is_unit() const {
    for (uint8_t e : exp_)
        if (e != 0) return false;
    return true;
}

int Monomial::degree(const RingSpec& ring) const {
    int d = 0;
    for (int i = 0; i < size(); ++i) d += exponent(i) * ring.variable(i).degree;
    return d;
}

bool Monomial::is_valid(const RingSpec& ring) const {
    if (size() != ring.variable_count()) return false;
    int marker_total = 0;
    for (int i = 0; i < size(); ++i) {
        const auto& v = ring.variable(i);
        int e = exponent(i);
        if (v.nilpotent && e > 1) return false;
        if (i == ring.t_index() && e > ring.t_truncation()) return false;
        if (i >= ring.marker_begin()) marker_total += e;
    }
    return marker_total <= ring.marker_truncation();
}

std::string Monomial::to_string(const RingSpec& ring) const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        int e = exponent(i);
        if (e == 0) continue;
        if (!first) out << " ";
        out << ring.variable(i).name;
        if (e > 1) out << "^" << e;
        first = false;
    }
    return first ? "1" : out.str();
}

SignedMonomial koszul_mul(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    SignedMonomial result;
    result.mono = Monomial(ring.variable_count());
    long crossings = 0;
    int marker_total = 0;
    for (int i = 0; i < ring.variable_count(); ++i) {
        int ea = a.exponent(i);
        int eb = b.exponent(i);
        const auto& v = ring.variable(i);
        if (v.nilpotent && ea + eb > 1) {
            result.zero = true;
            return result;
        }
        if (i == ring.t_index() && ea + eb > ring.t_truncation()) {
            result.zero = true;
            return result;
        }
        if (i >= ring.marker_begin()) marker_total += ea + eb;
        result.mono.set_exponent(i, ea + eb);
        if ((v.degree & 1) && eb > 0) {
            // Each odd generator of b crosses every odd generator of a that
            // sits later in the canonical order.
            for (int j = i + 1; j < ring.variable_count(); ++j) {
                if ((ring.variable(j).degree & 1) && a.exponent(j) > 0)
                    crossings += static_cast<long>(eb) * a.exponent(j);
            }
        }
    }
    if (marker_total > ring.marker_truncation()) {
        result.zero = true;
        return result;
    }
    result.sign = (crossings & 1) ? -1 : 1;
    return result;
}

std::vector<std::pair<Monomial, int>> monomial_differential(const RingSpec& ring,
                                                            const Monomial& m) {
    std::vector<std::pair<Monomial, int>> out;
    int prefix_parity = 0;  // parity of the degree of generators left of i
    for (int i = 0; i < ring.variable_count(); ++i) {
        int e = m.exponent(i);
        const auto& v = ring.variable(i);
        int target = ring.differential_target(i);
        if (e > 0 && target >= 0) {
            Monomial reduced = m;
            reduced.set_exponent(i, e - 1);
            // Reassemble left * d(x_i) * right around position i, charging
            // Koszul signs per crossing.
            Monomial left(ring.variable_count());
            Monomial right(ring.variable_count());
            for (int j = 0; j < ring.variable_count(); ++j) {
                if (j <= i)
                    left.set_exponent(j, reduced.exponent(j));
                else
                    right.set_exponent(j, reduced.exponent(j));
            }
            auto gr = koszul_mul(ring, Monomial::generator(ring, target), right);
            if (!gr.zero) {
                auto lgr = koszul_mul(ring, left, gr.mono);
                if (!lgr.zero) {
                    int sign = gr.sign * lgr.sign * ((prefix_parity & 1) ? -1 : 1);
                    out.emplace_back(lgr.mono, sign * e);
                }
            }
        }
        prefix_parity += e * v.degree;
    }
    return out;
}

// -- RingElement -------------------------------------------------------

RingElement RingElement::constant(RingHandle ring, const Rational& c) {
    RingElement e(std::move(ring));
    e.add_term(Monomial::unit(*e.ring_), c);
    return e;
}

RingElement RingElement::generator(RingHandle ring, int var) {
    RingElement e(std::move(ring));
    e.add_term(Monomial::generator(*e.ring_, var), Rational(1));
    return e;
}

Rational RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (!m.is_valid(*ring_)) return;  // truncated away
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool RingElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree(*ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*ring_) != d) return false;
    return true;
}

int RingElement::degree() const {
    if (terms_.empty()) throw DegreeError("degree of zero ring element");
    if (!is_homogeneous()) throw DegreeError("degree of inhomogeneous ring element");
    return terms_.begin()->first.degree(*ring_);
}

RingElement RingElement::operator-() const {
    RingElement out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring()->same(*b.ring()) && a.terms() == b.terms();
}

RingElement RingElement::scaled(const Rational& c) const {
    RingElement out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        out << c.to_string();
        if (!m.is_unit()) out << " " << m.to_string(*ring_);
        first = false;
    }
    return out.str();
}

void RingElement::check_same_ring(const RingElement& o) const {
    if (!ring_->same(*o.ring_))
        throw RingMismatchError("ring elements belong to different rings");
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RingElement out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto sm = koszul_mul(*a.ring_, ma, mb);
            if (sm.zero) continue;
            Rational c = ca * cb;
            if (sm.sign < 0) c = -c;
            out.add_term(sm.mono, c);
        }
    }
    return out;
}

RingElement ring_differential(const RingElement& a) {
    RingElement out(a.ring_);
    for (const auto& [m, c] : a.terms_) {
        for (const auto& [dm, k] : monomial_differential(*a.ring_, m))
            out.add_term(dm, c * Rational(k));
    }
    return out;
}

}  // namespace hpt
