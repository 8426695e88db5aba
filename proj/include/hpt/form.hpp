// Differential forms on the flat 3-torus [0,2pi)^3, sampled on an N^3
// collocation grid (x fastest).
//
// Frame bases, fixed throughout:
//   k=0: 1
//   k=1: dx, dy, dz
//   k=2: dy^dz, dz^dx, dx^dy
//   k=3: dx^dy^dz
// With these bases the Hodge star is the identity on components.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "hpt/errors.hpp"

namespace hpt {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Grid {
    int n = 32;
    int dealias_factor = 1;  // oversampling multiplier for pointwise products

    Grid() = default;
    explicit Grid(int points, int dealias = 1) : n(points), dealias_factor(dealias) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid: N must be a power of two >= 8");
        if (dealias_factor < 1)
            throw std::invalid_argument("Grid: dealias_factor must be >= 1");
    }

    double spacing() const { return kTwoPi / n; }
    double cell_volume() const { return spacing() * spacing() * spacing(); }
    double volume() const { return kTwoPi * kTwoPi * kTwoPi; }
    size_t point_count() const {
        return static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n);
    }
    size_t index(int ix, int iy, int iz) const {
        return static_cast<size_t>(ix) +
               static_cast<size_t>(n) * (static_cast<size_t>(iy) +
                                         static_cast<size_t>(n) * static_cast<size_t>(iz));
    }
    double coord(int i) const { return spacing() * i; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n == b.n && a.dealias_factor == b.dealias_factor;
    }
};

inline int component_count(int degree) {
    switch (degree) {
        case 0: return 1;
        case 1: return 3;
        case 2: return 3;
        case 3: return 1;
        default: throw DegreeError("form degree must be in 0..3");
    }
}

class Form {
  public:
    Form(const Grid& grid, int degree)
        : grid_(grid),
          degree_(degree),
          comp_(static_cast<size_t>(component_count(degree)),
                std::vector<double>(grid.point_count(), 0.0)) {}

    static Form constant(const Grid& grid, int degree, const std::vector<double>& values) {
        Form f(grid, degree);
        if (values.size() != f.comp_.size())
            throw DegreeError("constant form: component count mismatch");
        for (size_t c = 0; c < f.comp_.size(); ++c)
            f.comp_[c].assign(grid.point_count(), values[c]);
        return f;
    }

    // Sample a pointwise rule f(x,y,z) -> per-component values.
    static Form sampled(const Grid& grid, int degree,
                        const std::function<void(double, double, double, double*)>& rule) {
        Form f(grid, degree);
        const int n = grid.n;
        std::vector<double> vals(f.comp_.size());
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    rule(grid.coord(ix), grid.coord(iy), grid.coord(iz), vals.data());
                    size_t idx = grid.index(ix, iy, iz);
                    for (size_t c = 0; c < f.comp_.size(); ++c) f.comp_[c][idx] = vals[c];
                }
        return f;
    }

    const Grid& grid() const { return grid_; }
    int degree() const { return degree_; }
    int components() const { return static_cast<int>(comp_.size()); }
    std::vector<double>& component(int c) { return comp_[static_cast<size_t>(c)]; }
    const std::vector<double>& component(int c) const { return comp_[static_cast<size_t>(c)]; }

    double sup_norm() const {
        double m = 0.0;
        for (const auto& c : comp_)
            for (double v : c) m = std::max(m, std::abs(v));
        return m;
    }
    double l2_norm() const {
        double s = 0.0;
        for (const auto& c : comp_)
            for (double v : c) s += v * v;
        return std::sqrt(s * grid_.cell_volume());
    }
    bool is_zero() const {
        for (const auto& c : comp_)
            for (double v : c)
                if (v != 0.0) return false;
        return true;
    }

    Form& operator+=(const Form& o) {
        check_compatible(o);
        for (size_t c = 0; c < comp_.size(); ++c)
            for (size_t i = 0; i < comp_[c].size(); ++i) comp_[c][i] += o.comp_[c][i];
        return *this;
    }
    Form& operator-=(const Form& o) {
        check_compatible(o);
        for (size_t c = 0; c < comp_.size(); ++c)
            for (size_t i = 0; i < comp_[c].size(); ++i) comp_[c][i] -= o.comp_[c][i];
        return *this;
    }
    Form& operator*=(double s) {
        for (auto& c : comp_)
            for (double& v : c) v *= s;
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(double s, Form a) { return a *= s; }
    friend Form operator*(Form a, double s) { return a *= s; }
    Form operator-() const {
        Form out(*this);
        out *= -1.0;
        return out;
    }

    void check_compatible(const Form& o) const {
        if (!(grid_ == o.grid_)) throw GridMismatchError("forms live on different grids");
        if (degree_ != o.degree_) throw DegreeError("forms have different degrees");
    }

  private:
    Grid grid_;
    int degree_;
    std::vector<std::vector<double>> comp_;
};

class VectorField {
  public:
    explicit VectorField(const Grid& grid)
        : grid_(grid), comp_(3, std::vector<double>(grid.point_count(), 0.0)) {}

    static VectorField sampled(const Grid& grid,
                               const std::function<void(double, double, double, double*)>& rule) {
        VectorField u(grid);
        const int n = grid.n;
        double vals[3];
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix) {
                    rule(grid.coord(ix), grid.coord(iy), grid.coord(iz), vals);
                    size_t idx = grid.index(ix, iy, iz);
                    for (int c = 0; c < 3; ++c) u.comp_[static_cast<size_t>(c)][idx] = vals[c];
                }
        return u;
    }

    const Grid& grid() const { return grid_; }
    std::vector<double>& component(int c) { return comp_[static_cast<size_t>(c)]; }
    const std::vector<double>& component(int c) const { return comp_[static_cast<size_t>(c)]; }

    double sup_norm() const {
        double m = 0.0;
        for (const auto& c : comp_)
            for (double v : c) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    Grid grid_;
    std::vector<std::vector<double>> comp_;
};

// Pointwise product of a 0-form against each component of a k-form; with
// divide set, pointwise quotient (the 0-form must not vanish).
Form scale_pointwise(const Form& a, const Form& scalar, bool divide = false);

// Pointwise exponential / logarithm of a 0-form.
Form pointwise_exp(const Form& f);
Form pointwise_log(const Form& f);  // throws DensityError unless f > 0

}  // namespace hpt
