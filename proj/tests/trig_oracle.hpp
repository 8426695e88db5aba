// Test-only symbolic trigonometric oracle: finite Fourier sums with exact
// coefficient bookkeeping, independent of the library's transform path.
// Real-valued fields are represented as sums of c_k e^{i k.x} with the
// Hermitian pairing maintained by construction.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>

#include "hpt/form.hpp"

namespace oracle {

struct Key {
    int kx = 0, ky = 0, kz = 0;
    friend bool operator<(const Key& a, const Key& b) {
        if (a.kx != b.kx) return a.kx < b.kx;
        if (a.ky != b.ky) return a.ky < b.ky;
        return a.kz < b.kz;
    }
    friend bool operator==(const Key& a, const Key& b) {
        return a.kx == b.kx && a.ky == b.ky && a.kz == b.kz;
    }
};

class TrigPoly {
  public:
    using Coeff = std::complex<double>;

    TrigPoly() = default;

    static TrigPoly constant(double c) {
        TrigPoly p;
        p.add({0, 0, 0}, c);
        return p;
    }
    // amplitude * cos(k.x + phase)
    static TrigPoly cosine(Key k, double amplitude = 1.0, double phase = 0.0) {
        TrigPoly p;
        Coeff half = 0.5 * amplitude * std::exp(Coeff(0.0, phase));
        p.add(k, half);
        p.add({-k.kx, -k.ky, -k.kz}, std::conj(half));
        return p;
    }
    static TrigPoly sine(Key k, double amplitude = 1.0) {
        return cosine(k, amplitude, -std::acos(-1.0) / 2.0);
    }

    void add(Key k, Coeff c) {
        auto [it, inserted] = coeff_.emplace(k, c);
        if (!inserted) it->second += c;
        if (std::abs(it->second) == 0.0) coeff_.erase(k);
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (const auto& [k, c] : o.coeff_) add(k, c);
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        for (const auto& [k, c] : o.coeff_) add(k, -c);
        return *this;
    }
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(double s, TrigPoly a) {
        for (auto& [k, c] : a.coeff_) c *= s;
        return a;
    }
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {  // convolution
        TrigPoly out;
        for (const auto& [ka, ca] : a.coeff_)
            for (const auto& [kb, cb] : b.coeff_)
                out.add({ka.kx + kb.kx, ka.ky + kb.ky, ka.kz + kb.kz}, ca * cb);
        return out;
    }

    // Keep only modes with |k|_inf <= kmax.
    TrigPoly truncated(int kmax) const {
        TrigPoly out;
        for (const auto& [k, c] : coeff_)
            if (std::abs(k.kx) <= kmax && std::abs(k.ky) <= kmax && std::abs(k.kz) <= kmax)
                out.add(k, c);
        return out;
    }

    TrigPoly derivative(int axis) const {
        TrigPoly out;
        for (const auto& [k, c] : coeff_) {
            int kk = axis == 0 ? k.kx : axis == 1 ? k.ky : k.kz;
            out.add(k, c * Coeff(0.0, kk));
        }
        return out;
    }

    double integral() const {  // over [0,2pi)^3
        auto it = coeff_.find({0, 0, 0});
        double zero_mode = it == coeff_.end() ? 0.0 : it->second.real();
        return zero_mode * hpt::kTwoPi * hpt::kTwoPi * hpt::kTwoPi;
    }
    double mean() const { return integral() / (hpt::kTwoPi * hpt::kTwoPi * hpt::kTwoPi); }

    double eval(double x, double y, double z) const {
        Coeff v = 0.0;
        for (const auto& [k, c] : coeff_)
            v += c * std::exp(Coeff(0.0, k.kx * x + k.ky * y + k.kz * z));
        return v.real();
    }

    std::vector<double> sample(const hpt::Grid& grid) const {
        std::vector<double> out(grid.point_count());
        for (int iz = 0; iz < grid.n; ++iz)
            for (int iy = 0; iy < grid.n; ++iy)
                for (int ix = 0; ix < grid.n; ++ix)
                    out[grid.index(ix, iy, iz)] =
                        eval(grid.coord(ix), grid.coord(iy), grid.coord(iz));
        return out;
    }

  private:
    std::map<Key, Coeff> coeff_;
};

using TrigVec = std::array<TrigPoly, 3>;

inline TrigVec vec_derivativeless() { return {}; }

inline TrigPoly dot(const TrigVec& a, const TrigVec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline TrigVec curl(const TrigVec& u) {
    TrigVec out;
    out[0] = u[2].derivative(1) - u[1].derivative(2);
    out[1] = u[0].derivative(2) - u[2].derivative(0);
    out[2] = u[1].derivative(0) - u[0].derivative(1);
    return out;
}

inline TrigPoly div(const TrigVec& u) {
    return u[0].derivative(0) + u[1].derivative(1) + u[2].derivative(2);
}

inline TrigVec grad(const TrigPoly& f) {
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

inline TrigVec abc_velocity(double A, double B, double C) {
    TrigVec u;
    u[0] = TrigPoly::sine({0, 0, 1}, A) + TrigPoly::cosine({0, 1, 0}, C);
    u[1] = TrigPoly::sine({1, 0, 0}, B) + TrigPoly::cosine({0, 0, 1}, A);
    u[2] = TrigPoly::sine({0, 1, 0}, C) + TrigPoly::cosine({1, 0, 0}, B);
    return u;
}

// Sample a 1-form (or vector field components) onto a grid Form.
inline hpt::Form sample_one_form(const hpt::Grid& grid, const TrigVec& u) {
    hpt::Form f(grid, 1);
    for (int c = 0; c < 3; ++c) f.component(c) = u[static_cast<size_t>(c)].sample(grid);
    return f;
}

inline hpt::Form sample_zero_form(const hpt::Grid& grid, const TrigPoly& f) {
    hpt::Form out(grid, 0);
    out.component(0) = f.sample(grid);
    return out;
}

}  // namespace oracle
