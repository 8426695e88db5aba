#include "hpt/hrv_engine.hpp"

#include <algorithm>
#include <cmath>

namespace hpt {

namespace {

RingHandle handle_for(RingSpec::Name name) {
    switch (name) {
        case RingSpec::Name::reals: return RingSpec::reals();
        case RingSpec::Name::eps: return RingSpec::poly_eps();
        case RingSpec::Name::eps_deps: return RingSpec::poly_eps_deps();
    }
    throw std::logic_error("unknown ring name");
}

// Monomial t^0 dt^a eps^b deps^c in the given ring.
Monomial mono_of(const RingSpec& ring, int dt, int eps, int deps) {
    Monomial m = Monomial::unit(ring);
    if (dt) m.set_exponent(ring.dt_index(), dt);
    if (eps || deps) {
        if (ring.name() == RingSpec::Name::reals)
            throw RingMismatchError("ring has no eps generators");
        if (eps) m.set_exponent(2, eps);
        if (deps) {
            if (ring.name() != RingSpec::Name::eps_deps)
                throw RingMismatchError("ring has no deps generator");
            m.set_exponent(3, deps);
        }
    }
    return m;
}

void check_positive(const std::vector<Form>& rho) {
    for (const auto& r : rho)
        for (double v : r.component(0))
            if (!(v > 0.0)) throw DensityError("density must be positive pointwise");
}

FormFamily map_family(const FormFamily& fam, const std::function<Form(const Form&)>& op) {
    FormFamily out;
    out.reserve(fam.size());
    for (const auto& f : fam) out.push_back(op(f));
    return out;
}

const Form& at(const FormFamily& fam, size_t s) { return fam.size() == 1 ? fam[0] : fam[s]; }

}  // namespace

void FluidState::validate() const {
    if (times.empty()) throw std::invalid_argument("FluidState: no sample times");
    if (rho.size() != times.size() || u.size() != times.size() || p.size() != times.size())
        throw std::invalid_argument("FluidState: family sizes do not match sample times");
}

DecoratedForm HomotopyData::element() const {
    RingHandle handle = handle_for(ring);
    const RingSpec& r = *handle;
    DecoratedForm x(handle, grid, times);
    if (f) x.set_term(Monomial::unit(r), *f);
    if (X) x.set_term(mono_of(r, 1, 0, 0), *X);
    if (V) x.set_term(mono_of(r, 0, 1, 0), *V);
    if (pi) x.set_term(mono_of(r, 1, 1, 0), *pi);
    if (sigma) x.set_term(mono_of(r, 0, 0, 1), *sigma);
    if (Phi) x.set_term(mono_of(r, 1, 0, 1), *Phi);
    if (Psi) x.set_term(mono_of(r, 0, 1, 1), *Psi);
    return x;
}

DecoratedForm CollectionSpec::element() const {
    RingHandle handle = handle_for(ring);
    const RingSpec& r = *handle;
    DecoratedForm x(handle, grid);
    x.set_term(Monomial::unit(r), {f});

    if (ring == RingSpec::Name::eps) {
        if (!V) throw SlotError("R[eps] collection needs V");
        x.set_term(mono_of(r, 0, 1, 0), {*V});
    } else if (ring == RingSpec::Name::eps_deps) {
        if (!sigma) throw SlotError("R[eps,deps] collection needs sigma");
        Form rho = pointwise_exp(f);
        // The deps and (deps)^2 coefficient equations determine V and Psi:
        // V = delta(rho sigma)/rho, Psi = -V ^ sigma.
        Form v = V ? *V : scale_pointwise(codifferential(scale_pointwise(*sigma, rho)), rho, true);
        Form psi = Psi ? *Psi : -wedge(v, *sigma);
        x.set_term(mono_of(r, 0, 1, 0), {v});
        x.set_term(mono_of(r, 0, 0, 1), {*sigma});
        x.set_term(mono_of(r, 0, 1, 1), {psi});
    }
    return x;
}

std::string equation_name(const RingSpec& ring, const Monomial& m) {
    auto matches = [&](int dt, int eps, int deps) {
        Monomial probe = Monomial::unit(ring);
        if (dt) probe.set_exponent(ring.dt_index(), dt);
        if (eps) probe.set_exponent(2, eps);
        if (deps) probe.set_exponent(3, deps);
        return m == probe;
    };
    bool has_eps = ring.name() != RingSpec::Name::reals;
    bool has_deps = ring.name() == RingSpec::Name::eps_deps;
    if (matches(0, 0, 0)) return "scalar";
    if (matches(1, 0, 0)) return "mass";
    if (has_eps) {
        if (matches(0, 1, 0)) return "div-free";
        if (matches(1, 1, 0)) return "vorticity";
    }
    if (has_deps) {
        if (matches(0, 0, 1)) return "V-equation";
        if (matches(0, 1, 1)) return "trivial-equation";
        if (matches(0, 0, 2)) return "Psi-equation";
        if (matches(1, 0, 1)) return "momentum";
        if (matches(1, 1, 1)) return "helicity-equation";
    }
    return m.to_string(ring);
}

double ResidualReport::max_residual(const std::string& equation) const {
    auto it = residuals.find(equation);
    if (it == residuals.end()) throw std::out_of_range("no equation " + equation);
    double m = 0.0;
    for (double v : it->second) m = std::max(m, v);
    return m;
}

double ResidualReport::worst() const {
    double m = 0.0;
    for (const auto& [eq, series] : residuals)
        for (double v : series) m = std::max(m, v);
    return m;
}

namespace {

ResidualReport residual_of_element(const DecoratedForm& x, double tol) {
    DecoratedForm e = df_exp(x);
    auto norms = delta_total_supnorms(e);
    ResidualReport report;
    report.tolerance = tol;
    report.times = x.times();
    const RingSpec& ring = *x.ring();
    for (auto& [mono, series] : norms) {
        std::string name = equation_name(ring, mono);
        auto [it, inserted] = report.residuals.emplace(name, std::move(series));
        if (!inserted)
            throw std::logic_error("duplicate residual equation " + name);
    }

    // Equations whose coefficient vanished identically still belong in the
    // report.
    bool sampled = !x.times().empty();
    bool has_eps = ring.name() != RingSpec::Name::reals;
    bool has_deps = ring.name() == RingSpec::Name::eps_deps;
    std::vector<std::array<int, 3>> expected = {{0, 0, 0}};
    if (sampled) expected.push_back({1, 0, 0});
    if (has_eps) {
        expected.push_back({0, 1, 0});
        if (sampled) expected.push_back({1, 1, 0});
    }
    if (has_deps) {
        expected.push_back({0, 0, 1});
        expected.push_back({0, 1, 1});
        expected.push_back({0, 0, 2});
        if (sampled) {
            expected.push_back({1, 0, 1});
            expected.push_back({1, 1, 1});
        }
    }
    size_t count = x.sample_count();
    for (const auto& [dt, eps, deps] : expected) {
        std::string name = equation_name(ring, mono_of(ring, dt, eps, deps));
        report.residuals.emplace(name, std::vector<double>(count, 0.0));
    }

    report.pass = report.worst() <= tol;
    return report;
}

}  // namespace

ResidualReport collection_residual(const CollectionSpec& c, double tol) {
    return residual_of_element(c.element(), tol);
}

ResidualReport collection_residual(const HomotopyData& h, double tol) {
    return residual_of_element(h.element(), tol);
}

HomotopyData build_mass_homotopy(const FluidState& s) {
    s.validate();
    check_positive(s.rho);
    HomotopyData h;
    h.ring = RingSpec::Name::reals;
    h.grid = s.grid;
    h.times = s.times;
    h.f = map_family(s.rho, [](const Form& r) { return pointwise_log(r); });
    FormFamily x;
    x.reserve(s.u.size());
    for (const auto& vel : s.u) x.push_back(flat(vel));
    h.X = std::move(x);
    return h;
}

HomotopyData build_vorticity_homotopy(const Grid& grid, const std::vector<double>& times,
                                      const std::vector<VectorField>& u) {
    if (u.size() != times.size())
        throw std::invalid_argument("build_vorticity_homotopy: size mismatch");
    HomotopyData h;
    h.ring = RingSpec::Name::eps;
    h.grid = grid;
    h.times = times;
    FormFamily X, V, pi;
    for (const auto& vel : u) {
        Form x = flat(vel);
        // f = 0, X = u_flat, V = -star dX, pi = (1/2) delta(X ^ star X)
        V.push_back(-hodge_star(exterior_derivative(x)));
        pi.push_back(0.5 * codifferential(wedge(x, hodge_star(x))));
        X.push_back(std::move(x));
    }
    h.X = std::move(X);
    h.V = std::move(V);
    h.pi = std::move(pi);
    return h;
}

HomotopyData build_euler_homotopy(const FluidState& s) {
    s.validate();
    check_positive(s.rho);
    HomotopyData h;
    h.ring = RingSpec::Name::eps_deps;
    h.grid = s.grid;
    h.times = s.times;
    FormFamily f, X, V, pi, sigma, Phi, Psi;
    for (size_t i = 0; i < s.times.size(); ++i) {
        const Form& rho = s.rho[i];
        Form x = flat(s.u[i]);
        Form star_x = hodge_star(x);
        Form div_x = codifferential(x);

        f.push_back(pointwise_log(rho));
        // V = -star d(rho X) / rho
        V.push_back(scale_pointwise(-hodge_star(exterior_derivative(scale_pointwise(x, rho))),
                                    rho, true));
        // pi = (1/2) delta(X ^ star X) - delta(X) star X
        pi.push_back(0.5 * codifferential(wedge(x, star_x)) - scale_pointwise(star_x, div_x));
        sigma.push_back(star_x);
        // Phi = star(p) / rho
        Phi.push_back(scale_pointwise(hodge_star(s.p[i]), rho, true));
        // Psi = X ^ dX
        Psi.push_back(wedge(x, exterior_derivative(x)));
        X.push_back(std::move(x));
    }
    h.f = std::move(f);
    h.X = std::move(X);
    h.V = std::move(V);
    h.pi = std::move(pi);
    h.sigma = std::move(sigma);
    h.Phi = std::move(Phi);
    h.Psi = std::move(Psi);
    return h;
}

namespace {

double family_sup(const FormFamily& fam) {
    double m = 0.0;
    for (const auto& f : fam) m = std::max(m, f.sup_norm());
    return m;
}

const FormFamily& require_slot(const std::optional<FormFamily>& slot, const char* name) {
    if (!slot) throw SlotError(std::string("missing homotopy slot ") + name);
    return *slot;
}

}  // namespace

std::map<std::string, double> constraint_check(const HomotopyData& h, LemmaKind lemma) {
    std::map<std::string, double> out;
    if (lemma == LemmaKind::mass) return out;

    const FormFamily& X = require_slot(h.X, "X");
    size_t count = X.size();

    if (lemma == LemmaKind::vorticity) {
        const FormFamily& V = require_slot(h.V, "V");
        const FormFamily& pi = require_slot(h.pi, "pi");
        double dens = h.f ? family_sup(*h.f) : 0.0;
        double vort = 0.0, vort_listed = 0.0, kinetic = 0.0;
        for (size_t s = 0; s < count; ++s) {
            const Form& x = at(X, s);
            vort = std::max(vort,
                            (at(V, s) + hodge_star(exterior_derivative(x))).sup_norm());
            // Secondary diagnostic: the V = star X reading compares a 1-form
            // with a 2-form, so go through the flat-frame identification.
            const Form& v = at(V, s);
            Form vs = hodge_star(x);
            double d = 0.0;
            for (int c = 0; c < 3; ++c)
                for (size_t i = 0; i < v.component(c).size(); ++i)
                    d = std::max(d, std::abs(v.component(c)[i] - vs.component(c)[i]));
            vort_listed = std::max(vort_listed, d);
            kinetic = std::max(
                kinetic,
                (at(pi, s) - 0.5 * codifferential(wedge(x, hodge_star(x)))).sup_norm());
        }
        out["density-constraint"] = dens;
        out["vorticity-constraint"] = vort;
        out["vorticity-constraint-as-listed"] = vort_listed;
        out["kinetic-constraint"] = kinetic;
        return out;
    }

    // Euler
    const FormFamily& sigma = require_slot(h.sigma, "sigma");
    const FormFamily& pi = require_slot(h.pi, "pi");
    double velocity = 0.0, kinetic = 0.0;
    for (size_t s = 0; s < count; ++s) {
        const Form& x = at(X, s);
        Form star_x = hodge_star(x);
        velocity = std::max(velocity, (at(sigma, s) - star_x).sup_norm());
        Form expected =
            0.5 * codifferential(wedge(x, star_x)) - scale_pointwise(star_x, codifferential(x));
        kinetic = std::max(kinetic, (at(pi, s) - expected).sup_norm());
    }
    out["velocity-constraint"] = velocity;
    out["modified-kinetic-constraint"] = kinetic;
    return out;
}

namespace {

StatisticsReport statistics_of_element(const DecoratedForm& x) {
    StatisticsReport report;
    report.times = x.times();
    DecoratedForm e = df_exp(x);
    const RingSpec& ring = *e.ring();
    size_t count = e.sample_count();
    for (const auto& [m, fam] : e.terms()) {
        if (fam[0].degree() != 0) continue;  // E vanishes outside degree 0
        std::vector<double> series(count, 0.0);
        for (size_t s = 0; s < count; ++s) series[s] = expectation(at(fam, s));
        if (m.is_unit()) report.mass = series;
        report.real_statistics.emplace(m.to_string(ring), std::move(series));
    }
    return report;
}

StatisticsReport cohomology_of_element(const DecoratedForm& x) {
    StatisticsReport report;
    report.times = x.times();
    DecoratedForm e = df_exp(x);
    const RingSpec& ring = *e.ring();
    size_t count = e.sample_count();
    for (const auto& [m, fam] : e.terms()) {
        int degree = fam[0].degree();
        int offset = degree == 0 ? 0 : degree == 1 ? 1 : degree == 2 ? 4 : 7;
        std::vector<std::vector<double>> series;
        series.reserve(count);
        for (size_t s = 0; s < count; ++s) {
            Form proj = harmonic_projection(at(fam, s));
            std::vector<double> basis(8, 0.0);
            for (int c = 0; c < proj.components(); ++c)
                basis[static_cast<size_t>(offset + c)] = proj.component(c)[0];
            series.push_back(std::move(basis));
        }
        report.cohomology.emplace(m.to_string(ring), std::move(series));
        if (degree == 0 && m.is_unit()) {
            std::vector<double> mass(count, 0.0);
            for (size_t s = 0; s < count; ++s) mass[s] = expectation(at(fam, s));
            report.mass = std::move(mass);
        }
    }
    return report;
}

}  // namespace

StatisticsReport statistics(const HomotopyData& h) { return statistics_of_element(h.element()); }
StatisticsReport statistics(const CollectionSpec& c) { return statistics_of_element(c.element()); }
StatisticsReport cohomology_statistics(const HomotopyData& h) {
    return cohomology_of_element(h.element());
}
StatisticsReport cohomology_statistics(const CollectionSpec& c) {
    return cohomology_of_element(c.element());
}

std::vector<double> helicity(const HomotopyData& h) {
    const FormFamily& Psi = require_slot(h.Psi, "Psi");
    size_t count = h.times.empty() ? 1 : h.times.size();
    std::vector<double> out(count, 0.0);
    for (size_t s = 0; s < count; ++s) out[s] = integrate(at(Psi, s));
    return out;
}

HomotopyData construct_density_homotopy(const Form& f0, const Form& f1, int samples,
                                        double tol_mass) {
    if (f0.degree() != 0 || f1.degree() != 0)
        throw DegreeError("construct_density_homotopy expects 0-forms");
    if (!(f0.grid() == f1.grid()))
        throw GridMismatchError("construct_density_homotopy: grid mismatch");
    if (samples < 5) throw std::invalid_argument("need at least 5 sample times");

    Form rho0 = pointwise_exp(f0);
    Form rho1 = pointwise_exp(f1);
    double m0 = expectation(rho0);
    double m1 = expectation(rho1);
    if (std::abs(m0 - m1) > tol_mass * std::max(std::abs(m0), std::abs(m1)))
        throw MassError("construct_density_homotopy: masses differ");

    // delta(Y) = e^{f1} - e^{f0} via Y = d(phi), delta d phi = h.
    Form h = rho1 - rho0;
    Form phi = poisson_solve(h, 1e-8);
    Form y = exterior_derivative(phi);

    HomotopyData out;
    out.ring = RingSpec::Name::reals;
    out.grid = f0.grid();
    out.times.resize(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i)
        out.times[static_cast<size_t>(i)] = static_cast<double>(i) / (samples - 1);

    FormFamily f, X;
    for (double t : out.times) {
        Form blend = (1.0 - t) * rho0 + t * rho1;
        f.push_back(pointwise_log(blend));
        Form xt = scale_pointwise(y, blend, true);
        xt *= -1.0;
        X.push_back(std::move(xt));
    }
    out.f = std::move(f);
    out.X = std::move(X);
    return out;
}

std::map<std::string, double> joint_moments(const Grid& grid, const std::vector<Form>& forms,
                                            int max_order) {
    if (forms.empty()) throw std::invalid_argument("joint_moments: no forms given");
    RingHandle ring = RingSpec::with_markers(RingSpec::Name::reals,
                                             static_cast<int>(forms.size()), max_order);
    DecoratedForm x(ring, grid);
    for (size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].degree() != 0)
            throw DegreeError("joint_moments: marker coefficients must be 0-forms");
        x.set_term(Monomial::generator(*ring, ring->marker_begin() + static_cast<int>(i)),
                   {forms[i]});
    }
    DecoratedForm e = df_exp(x);
    std::map<std::string, double> out;
    for (const auto& [m, fam] : e.terms()) {
        // exp contributes prod f_i^{a_i} / prod a_i!; multiply back to moments.
        double factorial = 1.0;
        for (int v = ring->marker_begin(); v < ring->variable_count(); ++v)
            for (int k = 2; k <= m.exponent(v); ++k) factorial *= k;
        out.emplace(m.to_string(*ring), expectation(fam[0]) * factorial);
    }
    return out;
}

std::map<std::string, double> euler_redundancy_residuals(const HomotopyData& h) {
    if (h.ring != RingSpec::Name::eps_deps)
        throw SlotError("euler_redundancy_residuals needs an R[eps,deps] homotopy");
    DecoratedForm x = h.element();
    DecoratedForm delta = df_delta_total(df_exp(x));
    const RingSpec& ring = *delta.ring();
    size_t count = delta.sample_count();

    auto family_of = [&](int dt, int eps, int deps) {
        Monomial m = mono_of(ring, dt, eps, deps);
        FormFamily fam;
        fam.reserve(count);
        for (size_t s = 0; s < count; ++s) fam.push_back(coefficient_of(delta, m, s));
        return fam;
    };

    FormFamily r_divfree = family_of(0, 1, 0);
    FormFamily r_V = family_of(0, 0, 1);
    FormFamily r_vort = family_of(1, 1, 0);
    FormFamily r_mom = family_of(1, 0, 1);
    FormFamily r_triv = family_of(0, 1, 1);
    FormFamily r_psi = family_of(0, 0, 2);
    FormFamily r_hel = family_of(1, 1, 1);

    bool sampled = !h.times.empty();
    FormFamily dt_rV, dt_rpsi;
    if (sampled) {
        dt_rV = family_time_derivative(h.times, r_V);
        dt_rpsi = family_time_derivative(h.times, r_psi);
    }

    std::map<std::string, double> out;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    for (size_t s = 0; s < count; ++s) {
        a = std::max(a, (codifferential(r_V[s]) + r_divfree[s]).sup_norm());
        c = std::max(c, (codifferential(r_psi[s]) + r_triv[s]).sup_norm());
        if (sampled) {
            b = std::max(b, (codifferential(r_mom[s]) - dt_rV[s] + r_vort[s]).sup_norm());
            d = std::max(d, (dt_rpsi[s] - r_hel[s]).sup_norm());
        }
    }
    out["delta-V-equation-vs-div-free"] = a;
    out["delta-Psi-equation-vs-trivial-equation"] = c;
    if (sampled) {
        out["delta-momentum-vs-vorticity"] = b;
        out["dt-Psi-equation-vs-helicity-equation"] = d;
    }
    return out;
}

}  // namespace hpt
