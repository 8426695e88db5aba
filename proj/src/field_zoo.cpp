#include "hpt/field_zoo.hpp"

#include <cmath>

#include "hpt/dec.hpp"

namespace hpt {

double Profile::eval(double x, double y, double z) const {
    double v = offset;
    for (const auto& m : modes)
        v += m.amplitude *
             std::cos(m.wavevector[0] * x + m.wavevector[1] * y + m.wavevector[2] * z + m.phase);
    return v;
}

int Profile::max_wavenumber() const {
    int k = 0;
    for (const auto& m : modes)
        for (int c = 0; c < 3; ++c) k = std::max(k, std::abs(m.wavevector[c]));
    return k;
}

namespace {

FluidState steady_state(const Grid& grid, const std::vector<double>& times,
                        const VectorField& u, const Form& rho, const Form& p) {
    FluidState s;
    s.grid = grid;
    s.times = times;
    for (size_t i = 0; i < times.size(); ++i) {
        s.rho.push_back(rho);
        s.u.push_back(u);
        s.p.push_back(p);
    }
    return s;
}

}  // namespace

AnalyticField abc_flow(double A, double B, double C) {
    AnalyticField field;
    field.name = "abc";
    field.realize = [A, B, C](const Grid& grid, const std::vector<double>& times) {
        VectorField u = VectorField::sampled(grid, [&](double x, double y, double z, double* v) {
            v[0] = A * std::sin(z) + C * std::cos(y);
            v[1] = B * std::sin(x) + A * std::cos(z);
            v[2] = C * std::sin(y) + B * std::cos(x);
        });
        Form rho = Form::constant(grid, 0, {1.0});
        Form p = Form::sampled(grid, 0, [&](double x, double y, double z, double* v) {
            double ux = A * std::sin(z) + C * std::cos(y);
            double uy = B * std::sin(x) + A * std::cos(z);
            double uz = C * std::sin(y) + B * std::cos(x);
            v[0] = -0.5 * (ux * ux + uy * uy + uz * uz);
        });
        return steady_state(grid, times, u, rho, p);
    };
    return field;
}

AnalyticField shear_flow(double amplitude) {
    AnalyticField field;
    field.name = "shear";
    field.realize = [amplitude](const Grid& grid, const std::vector<double>& times) {
        VectorField u = VectorField::sampled(grid, [&](double, double y, double, double* v) {
            v[0] = amplitude * std::sin(y);
            v[1] = 0.0;
            v[2] = 0.0;
        });
        Form rho = Form::constant(grid, 0, {1.0});
        Form p = Form(grid, 0);
        return steady_state(grid, times, u, rho, p);
    };
    return field;
}

std::array<double, 2> taylor_green_pressure_fit(const Grid& grid) {
    VectorField u = VectorField::sampled(grid, [](double x, double y, double, double* v) {
        v[0] = std::sin(x) * std::cos(y);
        v[1] = -std::cos(x) * std::sin(y);
        v[2] = 0.0;
    });
    // Steady momentum residual grad(|u|^2/2) - u x curl u + grad p, with the
    // pressure expanded on {cos 2x, cos 2y}.
    Form x1 = flat(u);
    VectorField r0v = cross(u, curl(u));
    Form r0 = -flat(r0v);
    Form ke = 0.5 * wedge(x1, hodge_star(x1));  // |u|^2/2 dV
    Form grad_ke = hodge_star(codifferential(ke));
    // delta on 3-forms is the gradient in the 2-form basis; bring it to the
    // 1-form frame through star.
    r0 += grad_ke;

    Form b1 = Form::sampled(grid, 0, [](double x, double, double, double* v) { v[0] = std::cos(2 * x); });
    Form b2 = Form::sampled(grid, 0, [](double, double y, double, double* v) { v[0] = std::cos(2 * y); });
    Form g1 = exterior_derivative(b1);
    Form g2 = exterior_derivative(b2);

    // 2x2 normal equations for min ||r0 + c1 g1 + c2 g2||_{L2}.
    double a11 = l2_inner(g1, g1);
    double a12 = l2_inner(g1, g2);
    double a22 = l2_inner(g2, g2);
    double rhs1 = -l2_inner(g1, r0);
    double rhs2 = -l2_inner(g2, r0);
    double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-14) throw ConstructionError("taylor_green pressure fit singular");
    return {(rhs1 * a22 - rhs2 * a12) / det, (a11 * rhs2 - a12 * rhs1) / det};
}

AnalyticField taylor_green_2d(double fit_tolerance) {
    AnalyticField field;
    field.name = "taylor-green";
    field.realize = [fit_tolerance](const Grid& grid, const std::vector<double>& times) {
        VectorField u = VectorField::sampled(grid, [](double x, double y, double, double* v) {
            v[0] = std::sin(x) * std::cos(y);
            v[1] = -std::cos(x) * std::sin(y);
            v[2] = 0.0;
        });
        auto [c1, c2] = taylor_green_pressure_fit(grid);
        Form p = Form::sampled(grid, 0, [c1 = c1, c2 = c2](double x, double y, double, double* v) {
            v[0] = c1 * std::cos(2 * x) + c2 * std::cos(2 * y);
        });

        // The fitted pressure must actually kill the momentum residual.
        Form x1 = flat(u);
        Form residual = -flat(cross(u, curl(u)));
        residual += hodge_star(codifferential(0.5 * wedge(x1, hodge_star(x1))));
        residual += exterior_derivative(p);
        if (residual.sup_norm() > fit_tolerance)
            throw ConstructionError("taylor_green_2d: fitted pressure residual too large");

        Form rho = Form::constant(grid, 0, {1.0});
        return steady_state(grid, times, u, rho, p);
    };
    return field;
}

AnalyticField transport_solution(const Profile& g, const std::array<double, 3>& u0) {
    AnalyticField field;
    field.name = "transport";
    field.realize = [g, u0](const Grid& grid, const std::vector<double>& times) {
        FluidState s;
        s.grid = grid;
        s.times = times;
        VectorField u = VectorField::sampled(grid, [&](double, double, double, double* v) {
            v[0] = u0[0];
            v[1] = u0[1];
            v[2] = u0[2];
        });
        Form p = Form(grid, 0);
        for (double t : times) {
            Form rho = Form::sampled(grid, 0, [&](double x, double y, double z, double* v) {
                v[0] = g.eval(x - u0[0] * t, y - u0[1] * t, z - u0[2] * t);
            });
            for (double v : rho.component(0))
                if (!(v > 0.0))
                    throw DensityError("transport_solution: profile must stay positive");
            s.rho.push_back(std::move(rho));
            s.u.push_back(u);
            s.p.push_back(p);
        }
        return s;
    };
    return field;
}

VectorField random_divfree(const Grid& grid, int kmax, uint64_t seed) {
    return sharp(random_bandlimited(grid, 1, kmax, seed, /*divergence_free=*/true));
}

}  // namespace hpt
