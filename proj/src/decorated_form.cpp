#include "hpt/decorated_form.hpp"

#include <cmath>

namespace hpt {

namespace {

const Form& family_at(const FormFamily& family, size_t sample) {
    return family.size() == 1 ? family[0] : family[sample];
}

bool family_is_zero(const FormFamily& family) {
    for (const auto& f : family)
        if (!f.is_zero()) return false;
    return true;
}

}  // namespace

DecoratedForm::DecoratedForm(RingHandle ring, const Grid& grid, std::vector<double> times)
    : ring_(std::move(ring)), grid_(grid), times_(std::move(times)) {
    if (!times_.empty() && times_.size() < 5)
        throw std::invalid_argument(
            "DecoratedForm: sampled elements need at least 5 sample times");
}

DecoratedForm DecoratedForm::unit(RingHandle ring, const Grid& grid,
                                  std::vector<double> times) {
    DecoratedForm one(std::move(ring), grid, std::move(times));
    Form c = Form::constant(grid, 0, {1.0});
    one.set_term(Monomial::unit(*one.ring_), {c});
    return one;
}

void DecoratedForm::check_family(const Monomial& m, const FormFamily& family) const {
    if (!m.is_valid(*ring_)) throw RingMismatchError("monomial invalid in this ring");
    if (family.empty()) throw std::invalid_argument("empty form family");
    if (family.size() != 1 && family.size() != sample_count())
        throw std::invalid_argument("family size does not match sample count");
    int deg = family[0].degree();
    for (const auto& f : family) {
        if (!(f.grid() == grid_)) throw GridMismatchError("family form on a foreign grid");
        if (f.degree() != deg) throw DegreeError("family mixes form degrees");
    }
}

void DecoratedForm::set_term(const Monomial& m, FormFamily family) {
    check_family(m, family);
    if (family_is_zero(family)) {
        terms_.erase(m);
        return;
    }
    terms_.insert_or_assign(m, std::move(family));
}

void DecoratedForm::add_term(const Monomial& m, const FormFamily& family, double sign) {
    check_family(m, family);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        FormFamily copy;
        copy.reserve(family.size());
        for (const auto& f : family) {
            Form g = f;
            if (sign != 1.0) g *= sign;
            copy.push_back(std::move(g));
        }
        if (!family_is_zero(copy)) terms_.emplace(m, std::move(copy));
        return;
    }
    FormFamily& dst = it->second;
    if (dst.size() == family.size()) {
        for (size_t s = 0; s < dst.size(); ++s) {
            Form g = family[s];
            g *= sign;
            dst[s] += g;
        }
    } else {
        // Broadcast the shorter family across samples.
        size_t count = std::max(dst.size(), family.size());
        FormFamily merged;
        merged.reserve(count);
        for (size_t s = 0; s < count; ++s) {
            Form g = family_at(family, s);
            g *= sign;
            g += family_at(dst, s);
            merged.push_back(std::move(g));
        }
        dst = std::move(merged);
    }
    if (family_is_zero(dst)) terms_.erase(it);
}

const FormFamily& DecoratedForm::term(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) throw std::out_of_range("no such term");
    return it->second;
}

int DecoratedForm::total_degree() const {
    if (terms_.empty()) throw DegreeError("total degree of the zero element");
    if (!is_homogeneous()) throw DegreeError("total degree of an inhomogeneous element");
    const auto& [m, fam] = *terms_.begin();
    return fam[0].degree() + m.degree(*ring_);
}

bool DecoratedForm::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto& [m0, fam0] = *terms_.begin();
    int d = fam0[0].degree() + m0.degree(*ring_);
    for (const auto& [m, fam] : terms_)
        if (fam[0].degree() + m.degree(*ring_) != d) return false;
    return true;
}

DecoratedForm& DecoratedForm::operator+=(const DecoratedForm& o) {
    if (!ring_->same(*o.ring_)) throw RingMismatchError("decorated forms in different rings");
    if (!(grid_ == o.grid_)) throw GridMismatchError("decorated forms on different grids");
    for (const auto& [m, fam] : o.terms_) add_term(m, fam);
    return *this;
}

DecoratedForm DecoratedForm::scaled(double s) const {
    DecoratedForm out(ring_, grid_, times_);
    if (s == 0.0) return out;
    for (const auto& [m, fam] : terms_) {
        FormFamily scaled;
        scaled.reserve(fam.size());
        for (const auto& f : fam) {
            Form g = f;
            g *= s;
            scaled.push_back(std::move(g));
        }
        out.terms_.emplace(m, std::move(scaled));
    }
    return out;
}

DecoratedForm DecoratedForm::scaled_pointwise(const FormFamily& scalars, bool divide) const {
    DecoratedForm out(ring_, grid_, times_);
    for (const auto& [m, fam] : terms_) {
        size_t count = std::max(fam.size(), scalars.size());
        FormFamily scaled;
        scaled.reserve(count);
        for (size_t s = 0; s < count; ++s)
            scaled.push_back(scale_pointwise(family_at(fam, s), family_at(scalars, s), divide));
        out.set_term(m, std::move(scaled));
    }
    return out;
}

double DecoratedForm::sup_norm() const {
    double m = 0.0;
    for (const auto& [mono, fam] : terms_)
        for (const auto& f : fam) m = std::max(m, f.sup_norm());
    return m;
}

DecoratedForm df_mul(const DecoratedForm& a, const DecoratedForm& b) {
    if (!a.ring()->same(*b.ring()))
        throw RingMismatchError("df_mul: operands in different rings");
    if (!(a.grid() == b.grid())) throw GridMismatchError("df_mul: operands on different grids");
    std::vector<double> times = a.times().empty() ? b.times() : a.times();
    if (!a.times().empty() && !b.times().empty() && a.times() != b.times())
        throw std::invalid_argument("df_mul: sample times differ");

    DecoratedForm out(a.ring(), a.grid(), times);
    const RingSpec& ring = *a.ring();
    for (const auto& [ma, fa] : a.terms()) {
        int mono_parity = ma.degree(ring) & 1;
        for (const auto& [mb, fb] : b.terms()) {
            auto sm = koszul_mul(ring, ma, mb);
            if (sm.zero) continue;
            int form_deg = fa[0].degree() + fb[0].degree();
            if (form_deg > 3) continue;  // vanishes in Omega^*(M^3)
            double sign = sm.sign;
            if (mono_parity && (fb[0].degree() & 1)) sign = -sign;

            size_t count = std::max(fa.size(), fb.size());
            FormFamily prod;
            prod.reserve(count);
            for (size_t s = 0; s < count; ++s) {
                Form p = wedge(family_at(fa, s), family_at(fb, s));
                p *= sign;
                prod.push_back(std::move(p));
            }
            out.add_term(sm.mono, prod);
        }
    }
    return out;
}

namespace {

FormFamily pointwise_map(const FormFamily& fam, double (*fn)(double)) {
    FormFamily out;
    out.reserve(fam.size());
    for (const auto& f : fam) {
        Form g = f;
        for (double& v : g.component(0)) v = fn(v);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

DecoratedForm df_exp(const DecoratedForm& a) {
    if (!a.is_zero() && (!a.is_homogeneous() || a.total_degree() != 0))
        throw DegreeError("df_exp: element must have total degree 0");

    Monomial one = Monomial::unit(*a.ring());
    DecoratedForm rest(a.ring(), a.grid(), a.times());
    FormFamily scalar;
    for (const auto& [m, fam] : a.terms()) {
        if (m.is_unit())
            scalar = fam;
        else
            rest.set_term(m, fam);
    }

    DecoratedForm acc = DecoratedForm::unit(a.ring(), a.grid(), a.times());
    DecoratedForm power = acc;
    for (int k = 1; !power.is_zero() && k <= 64; ++k) {
        power = df_mul(power, rest).scaled(1.0 / k);
        acc += power;
    }

    if (scalar.empty()) return acc;
    return acc.scaled_pointwise(pointwise_map(scalar, [](double v) { return std::exp(v); }));
}

DecoratedForm df_log(const DecoratedForm& a) {
    auto it = a.terms().find(Monomial::unit(*a.ring()));
    if (it == a.terms().end())
        throw std::domain_error("df_log: element has no scalar part");
    const FormFamily& scalar = it->second;
    for (const auto& f : scalar)
        for (double v : f.component(0))
            if (!(v > 0.0)) throw std::domain_error("df_log: scalar part must be positive");

    DecoratedForm w(a.ring(), a.grid(), a.times());
    for (const auto& [m, fam] : a.terms()) {
        if (m.is_unit()) continue;
        FormFamily scaled;
        size_t count = std::max(fam.size(), scalar.size());
        scaled.reserve(count);
        for (size_t s = 0; s < count; ++s)
            scaled.push_back(scale_pointwise(family_at(fam, s), family_at(scalar, s), true));
        w.set_term(m, std::move(scaled));
    }

    DecoratedForm acc(a.ring(), a.grid(), a.times());
    acc.set_term(Monomial::unit(*a.ring()),
                 pointwise_map(scalar, [](double v) { return std::log(v); }));
    DecoratedForm power = DecoratedForm::unit(a.ring(), a.grid(), a.times());
    for (int n = 1; !power.is_zero() && n <= 64; ++n) {
        power = df_mul(power, w);
        double coeff = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / n;
        acc += power.scaled(coeff);
    }
    return acc;
}

FormFamily family_time_derivative(const std::vector<double>& times, const FormFamily& family) {
    size_t m = times.size();
    if (family.size() != m)
        throw std::invalid_argument("family_time_derivative: size mismatch");
    if (m < 5)
        throw std::invalid_argument("family_time_derivative: need at least 5 samples");
    double h = times[1] - times[0];
    for (size_t i = 1; i + 1 < m; ++i)
        if (std::abs((times[i + 1] - times[i]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("family_time_derivative: samples must be uniform");

    auto combine = [&](std::initializer_list<std::pair<int, double>> stencil) {
        Form out(family[0].grid(), family[0].degree());
        for (auto [offset, weight] : stencil) {
            Form t = family[static_cast<size_t>(offset)];
            t *= weight / (12.0 * h);
            out += t;
        }
        return out;
    };

    FormFamily out;
    out.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        int p = static_cast<int>(i);
        int last = static_cast<int>(m) - 1;
        if (p >= 2 && p <= last - 2) {
            out.push_back(combine({{p - 2, 1.0}, {p - 1, -8.0}, {p + 1, 8.0}, {p + 2, -1.0}}));
        } else if (p == 0) {
            out.push_back(combine({{0, -25.0}, {1, 48.0}, {2, -36.0}, {3, 16.0}, {4, -3.0}}));
        } else if (p == 1) {
            out.push_back(combine({{0, -3.0}, {1, -10.0}, {2, 18.0}, {3, -6.0}, {4, 1.0}}));
        } else if (p == last - 1) {
            out.push_back(combine({{last, 3.0}, {last - 1, 10.0}, {last - 2, -18.0},
                                   {last - 3, 6.0}, {last - 4, -1.0}}));
        } else {  // p == last
            out.push_back(combine({{last, 25.0}, {last - 1, -48.0}, {last - 2, 36.0},
                                   {last - 3, -16.0}, {last - 4, 3.0}}));
        }
    }
    return out;
}

namespace {

// One additive contribution to delta_total, keyed by the output monomial.
struct DeltaPiece {
    const FormFamily* source;
    enum class Kind { codifferential, time_derivative, copy } kind;
    double sign;
};

std::map<Monomial, std::vector<DeltaPiece>> delta_pieces(const DecoratedForm& a) {
    const RingSpec& ring = *a.ring();
    std::map<Monomial, std::vector<DeltaPiece>> pieces;
    for (const auto& [m, fam] : a.terms()) {
        int form_parity = fam[0].degree() & 1;
        double koszul = form_parity ? -1.0 : 1.0;  // (-1)^{deg w} in front of d_R

        if (fam[0].degree() > 0)
            pieces[m].push_back({&fam, DeltaPiece::Kind::codifferential, 1.0});

        if (!a.times().empty() && fam.size() > 1) {
            auto sm = koszul_mul(ring, Monomial::generator(ring, ring.dt_index()), m);
            if (!sm.zero)
                pieces[sm.mono].push_back(
                    {&fam, DeltaPiece::Kind::time_derivative, koszul * sm.sign});
        }

        for (const auto& [dm, k] : monomial_differential(ring, m))
            pieces[dm].push_back({&fam, DeltaPiece::Kind::copy, koszul * k});
    }
    return pieces;
}

FormFamily materialize(const DecoratedForm& a, const std::vector<DeltaPiece>& list) {
    FormFamily out;
    for (const auto& piece : list) {
        FormFamily made;
        switch (piece.kind) {
            case DeltaPiece::Kind::codifferential: {
                made.reserve(piece.source->size());
                for (const auto& f : *piece.source) made.push_back(codifferential(f));
                break;
            }
            case DeltaPiece::Kind::time_derivative:
                made = family_time_derivative(a.times(), *piece.source);
                break;
            case DeltaPiece::Kind::copy:
                made = *piece.source;
                break;
        }
        size_t width = std::max(made.size(), out.size());
        if (out.empty()) {
            out.reserve(width);
            for (size_t s = 0; s < width; ++s) {
                Form f = family_at(made, s);
                f *= piece.sign;
                out.push_back(std::move(f));
            }
        } else {
            if (out.size() < width) {
                FormFamily widened;
                widened.reserve(width);
                for (size_t s = 0; s < width; ++s) widened.push_back(family_at(out, s));
                out = std::move(widened);
            }
            for (size_t s = 0; s < out.size(); ++s) {
                Form f = family_at(made, s);
                f *= piece.sign;
                out[s] += f;
            }
        }
    }
    return out;
}

}  // namespace

DecoratedForm df_delta_total(const DecoratedForm& a) {
    DecoratedForm out(a.ring(), a.grid(), a.times());
    for (auto& [mono, list] : delta_pieces(a)) out.set_term(mono, materialize(a, list));
    return out;
}

std::map<Monomial, std::vector<double>> delta_total_supnorms(const DecoratedForm& a) {
    std::map<Monomial, std::vector<double>> norms;
    for (auto& [mono, list] : delta_pieces(a)) {
        FormFamily fam = materialize(a, list);
        std::vector<double> per_sample(a.sample_count(), 0.0);
        for (size_t s = 0; s < a.sample_count(); ++s)
            per_sample[s] = family_at(fam, s).sup_norm();
        norms.emplace(mono, std::move(per_sample));
    }
    return norms;
}

Form coefficient_of(const DecoratedForm& a, const Monomial& m, size_t sample) {
    if (!m.is_valid(*a.ring()))
        throw RingMismatchError("coefficient_of: monomial invalid in this ring");
    auto it = a.terms().find(m);
    if (it != a.terms().end()) return family_at(it->second, sample);
    int degree = a.total_degree() - m.degree(*a.ring());
    if (degree < 0 || degree > 3)
        throw DegreeError("coefficient_of: inferred form degree outside 0..3");
    return Form(a.grid(), degree);
}

}  // namespace hpt
