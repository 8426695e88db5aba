#include "hpt/dec.hpp"

#include <algorithm>
#include <optional>

#include "spectral.hpp"

namespace hpt {

namespace {

using spectral::derivative;

std::vector<double> add3(const std::vector<double>& a, const std::vector<double>& b,
                         const std::vector<double>& c) {
    std::vector<double> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] + c[i];
    return out;
}

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// Pointwise product of two component arrays; routed through the finer grid
// when the owning grid requests dealiasing.
std::vector<double> mul_grid(const Grid& g, const std::vector<double>& a,
                             const std::vector<double>& b) {
    if (g.dealias_factor == 1) {
        std::vector<double> out(a.size());
        for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
        return out;
    }
    int m = g.n * g.dealias_factor;
    auto au = spectral::resample(a, g.n, m);
    auto bu = spectral::resample(b, g.n, m);
    for (size_t i = 0; i < au.size(); ++i) au[i] *= bu[i];
    return spectral::resample(au, m, g.n);
}

}  // namespace

Form exterior_derivative(const Form& w) {
    const Grid& g = w.grid();
    const int n = g.n;
    switch (w.degree()) {
        case 0: {
            Form out(g, 1);
            for (int axis = 0; axis < 3; ++axis)
                out.component(axis) = derivative(w.component(0), n, axis);
            return out;
        }
        case 1: {
            // d(a dx + b dy + c dz) has dy^dz, dz^dx, dx^dy components
            // (curl of the component triple).
            Form out(g, 2);
            out.component(0) = sub(derivative(w.component(2), n, 1),
                                   derivative(w.component(1), n, 2));
            out.component(1) = sub(derivative(w.component(0), n, 2),
                                   derivative(w.component(2), n, 0));
            out.component(2) = sub(derivative(w.component(1), n, 0),
                                   derivative(w.component(0), n, 1));
            return out;
        }
        case 2: {
            Form out(g, 3);
            out.component(0) = add3(derivative(w.component(0), n, 0),
                                    derivative(w.component(1), n, 1),
                                    derivative(w.component(2), n, 2));
            return out;
        }
        default:
            throw DegreeOverflow("exterior derivative of a 3-form");
    }
}

Form hodge_star(const Form& w) {
    // In the fixed frame bases star is the identity on components for every
    // degree (n = 3, flat orthonormal frame).
    Form out(w.grid(), 3 - w.degree());
    for (int c = 0; c < w.components(); ++c) out.component(c) = w.component(c);
    return out;
}

Form codifferential(const Form& w) {
    if (w.degree() == 0) return Form(w.grid(), 0);
    // delta = (-1)^(3k+1) star d star
    Form sds = hodge_star(exterior_derivative(hodge_star(w)));
    int sign = ((3 * w.degree() + 1) % 2 == 0) ? 1 : -1;
    if (sign < 0) sds *= -1.0;
    return sds;
}

Form wedge(const Form& a, const Form& b) {
    if (!(a.grid() == b.grid())) throw GridMismatchError("wedge: grid mismatch");
    const Grid& g = a.grid();
    int j = a.degree(), k = b.degree();
    if (j + k > 3) throw DegreeOverflow("wedge: degrees sum past 3");

    if (j == 0 || k == 0) {
        const Form& scalar = (j == 0) ? a : b;
        const Form& other = (j == 0) ? b : a;
        Form out(g, other.degree());
        for (int c = 0; c < other.components(); ++c)
            out.component(c) = mul_grid(g, scalar.component(0), other.component(c));
        return out;
    }
    if (j == 1 && k == 1) {
        // (a1,a2,a3) ^ (b1,b2,b3) -> cross product in the 2-form basis.
        Form out(g, 2);
        auto term = [&](int p, int q) { return mul_grid(g, a.component(p), b.component(q)); };
        out.component(0) = sub(term(1, 2), term(2, 1));
        out.component(1) = sub(term(2, 0), term(0, 2));
        out.component(2) = sub(term(0, 1), term(1, 0));
        return out;
    }
    // 1^2 and 2^1 both reduce to the frame dot product into dV.
    const Form& one = (j == 1) ? a : b;
    const Form& two = (j == 1) ? b : a;
    Form out(g, 3);
    out.component(0) = add3(mul_grid(g, one.component(0), two.component(0)),
                            mul_grid(g, one.component(1), two.component(1)),
                            mul_grid(g, one.component(2), two.component(2)));
    return out;
}

Form flat(const VectorField& u) {
    Form out(u.grid(), 1);
    for (int c = 0; c < 3; ++c) out.component(c) = u.component(c);
    return out;
}

VectorField sharp(const Form& w) {
    if (w.degree() != 1) throw DegreeError("sharp expects a 1-form");
    VectorField out(w.grid());
    for (int c = 0; c < 3; ++c) out.component(c) = w.component(c);
    return out;
}

VectorField gradient(const Form& f) {
    if (f.degree() != 0) throw DegreeError("gradient expects a 0-form");
    return sharp(exterior_derivative(f));
}

Form divergence(const VectorField& u) { return codifferential(flat(u)); }

VectorField curl(const VectorField& u) {
    return sharp(hodge_star(exterior_derivative(flat(u))));
}

VectorField cross(const VectorField& u, const VectorField& v) {
    return sharp(hodge_star(wedge(flat(u), flat(v))));
}

double integrate(const Form& w) {
    if (w.degree() != 3) throw DegreeError("integrate expects a 3-form");
    double s = 0.0;
    for (double v : w.component(0)) s += v;
    return s * w.grid().cell_volume();
}

double expectation(const Form& w) {
    if (w.degree() != 0) return 0.0;
    return integrate(hodge_star(w)) / w.grid().volume();
}

Form harmonic_projection(const Form& w) {
    Form out(w.grid(), w.degree());
    double inv = 1.0 / static_cast<double>(w.grid().point_count());
    for (int c = 0; c < w.components(); ++c) {
        double mean = 0.0;
        for (double v : w.component(c)) mean += v;
        mean *= inv;
        out.component(c).assign(w.grid().point_count(), mean);
    }
    return out;
}

Form poisson_solve(const Form& h, double tol_mean) {
    if (h.degree() != 0) throw DegreeError("poisson_solve expects a 0-form");
    const Grid& g = h.grid();
    const int n = g.n;
    double scale = std::max(1.0, h.sup_norm());
    double mean = expectation(h);
    if (std::abs(mean) > tol_mean * scale)
        throw MeanError("poisson_solve: right-hand side has nonzero mean");

    spectral::cvec spec = spectral::forward(h.component(0), n);
    for (int jz = 0; jz < n; ++jz)
        for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx) {
                size_t idx = g.index(jx, jy, jz);
                double kx = spectral::wavenumber(jx, n);
                double ky = spectral::wavenumber(jy, n);
                double kz = spectral::wavenumber(jz, n);
                double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0)
                    spec[idx] = 0.0;
                else
                    spec[idx] /= -k2;
            }
    Form out(g, 0);
    out.component(0) = spectral::inverse(std::move(spec), n);
    return out;
}

namespace {

using OptForm = std::optional<Form>;

// Wedges that overflow degree 3 and codifferentials of 0-forms land in
// genuinely zero graded pieces; both drop out of the identity.
OptForm owedge(const OptForm& a, const OptForm& b) {
    if (!a || !b) return std::nullopt;
    if (a->degree() + b->degree() > 3) return std::nullopt;
    return wedge(*a, *b);
}

OptForm odelta(const OptForm& a) {
    if (!a || a->degree() == 0) return std::nullopt;
    return codifferential(*a);
}

void accumulate(OptForm& acc, const OptForm& term, double sign) {
    if (!term) return;
    Form scaled = *term;
    scaled *= sign;
    if (!acc)
        acc = std::move(scaled);
    else
        *acc += scaled;
}

}  // namespace

double bv_seven_term_residual(const Form& a, const Form& b, const Form& c) {
    double sa = (a.degree() % 2 == 0) ? 1.0 : -1.0;  // (-1)^|a|
    double sbc = ((b.degree() * c.degree()) % 2 == 0) ? 1.0 : -1.0;
    double sab = ((a.degree() + b.degree()) % 2 == 0) ? 1.0 : -1.0;

    OptForm oa(a), ob(b), oc(c);
    OptForm lhs = odelta(owedge(owedge(oa, ob), oc));

    OptForm rhs;
    accumulate(rhs, owedge(odelta(owedge(oa, ob)), oc), 1.0);
    accumulate(rhs, owedge(oa, odelta(owedge(ob, oc))), sa);
    accumulate(rhs, owedge(odelta(owedge(oa, oc)), ob), sbc);
    accumulate(rhs, owedge(owedge(odelta(oa), ob), oc), -1.0);
    accumulate(rhs, owedge(owedge(oa, odelta(ob)), oc), -sa);
    accumulate(rhs, owedge(owedge(oa, ob), odelta(oc)), -sab);

    if (!lhs && !rhs) return 0.0;
    if (lhs && rhs) return (*lhs - *rhs).sup_norm();
    return lhs ? lhs->sup_norm() : rhs->sup_norm();
}

namespace {

// SplitMix64: deterministic across platforms, used for all seeded data.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() {  // in [-1, 1)
        return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    }
};

}  // namespace

Form random_bandlimited(const Grid& grid, int degree, int kmax, uint64_t seed,
                        bool divergence_free) {
    if (kmax < 0 || kmax > grid.n / 4)
        throw BandLimitError("random_bandlimited: kmax must lie in [0, N/4]");
    if (divergence_free && degree != 1)
        throw DegreeError("divergence_free projection applies to 1-forms only");

    const int n = grid.n;
    int ncomp = component_count(degree);
    std::vector<spectral::cvec> spec(static_cast<size_t>(ncomp),
                                     spectral::cvec(grid.point_count(), 0.0));
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(degree) + 1);

    // Mode amplitudes that keep the synthesized field O(1); the factor n^3
    // cancels the normalization of the inverse transform.
    double scale = static_cast<double>(grid.point_count()) /
                   std::pow(2.0 * kmax + 1.0, 1.5);
    auto bin = [n](int k) { return k >= 0 ? k : k + n; };

    for (int kz = -kmax; kz <= kmax; ++kz)
        for (int ky = -kmax; ky <= kmax; ++ky)
            for (int kx = -kmax; kx <= kmax; ++kx) {
                // Fill each +/- pair once, walking the lexicographically
                // positive half (plus the self-conjugate zero mode).
                bool positive = kz > 0 || (kz == 0 && (ky > 0 || (ky == 0 && kx > 0)));
                bool zero_mode = kx == 0 && ky == 0 && kz == 0;
                if (!positive && !zero_mode) continue;

                std::vector<std::complex<double>> coef(static_cast<size_t>(ncomp));
                for (int c = 0; c < ncomp; ++c) {
                    double re = rng.uniform() * scale;
                    double im = zero_mode ? 0.0 : rng.uniform() * scale;
                    coef[static_cast<size_t>(c)] = {re, im};
                }
                if (divergence_free && !zero_mode) {
                    std::complex<double> kdot =
                        coef[0] * static_cast<double>(kx) +
                        coef[1] * static_cast<double>(ky) +
                        coef[2] * static_cast<double>(kz);
                    double k2 = static_cast<double>(kx * kx + ky * ky + kz * kz);
                    coef[0] -= kdot * (kx / k2);
                    coef[1] -= kdot * (ky / k2);
                    coef[2] -= kdot * (kz / k2);
                }
                size_t idx = grid.index(bin(kx), bin(ky), bin(kz));
                size_t conj_idx = grid.index(bin(-kx), bin(-ky), bin(-kz));
                for (int c = 0; c < ncomp; ++c) {
                    spec[static_cast<size_t>(c)][idx] = coef[static_cast<size_t>(c)];
                    spec[static_cast<size_t>(c)][conj_idx] = std::conj(coef[static_cast<size_t>(c)]);
                }
            }

    Form out(grid, degree);
    for (int c = 0; c < ncomp; ++c)
        out.component(c) = spectral::inverse(std::move(spec[static_cast<size_t>(c)]), n);
    return out;
}

double l2_inner(const Form& a, const Form& b) {
    a.check_compatible(b);
    double s = 0.0;
    for (int c = 0; c < a.components(); ++c) {
        const auto& ac = a.component(c);
        const auto& bc = b.component(c);
        for (size_t i = 0; i < ac.size(); ++i) s += ac[i] * bc[i];
    }
    return s * a.grid().cell_volume();
}

}  // namespace hpt
