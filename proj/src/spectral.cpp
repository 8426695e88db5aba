#include "spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace hpt::spectral {

namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

// Plans are created once per grid size against a scratch buffer and executed
// on caller arrays through the new-array interface; FFTW_UNALIGNED keeps that
// legal for arbitrary vectors.
const PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    size_t total = static_cast<size_t>(n) * n * n;
    cvec scratch(total);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.forward = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_BACKWARD, flags);
    if (!p.forward || !p.backward) throw std::runtime_error("fftw plan creation failed");
    return cache.emplace(n, p).first->second;
}

}  // namespace

void fft3(cvec& data, int n, int sign) {
    size_t total = static_cast<size_t>(n) * n * n;
    if (data.size() != total) throw std::invalid_argument("fft3: size mismatch");
    const PlanPair& p = plans_for(n);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(sign < 0 ? p.forward : p.backward, ptr, ptr);
    if (sign > 0) {
        double scale = 1.0 / static_cast<double>(total);
        for (auto& v : data) v *= scale;
    }
}

cvec forward(const std::vector<double>& field, int n) {
    cvec out(field.size());
    for (size_t i = 0; i < field.size(); ++i) out[i] = field[i];
    fft3(out, n, -1);
    return out;
}

std::vector<double> inverse(cvec spec, int n) {
    fft3(spec, n, +1);
    std::vector<double> out(spec.size());
    for (size_t i = 0; i < spec.size(); ++i) out[i] = spec[i].real();
    return out;
}

std::vector<double> derivative(const std::vector<double>& field, int n, int axis) {
    cvec spec = forward(field, n);
    for (int jz = 0; jz < n; ++jz)
        for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx) {
                int j = axis == 0 ? jx : axis == 1 ? jy : jz;
                double k = static_cast<double>(wavenumber(j, n));
                if (j == n / 2) k = 0.0;  // Nyquist
                size_t idx = static_cast<size_t>(jx) +
                             static_cast<size_t>(n) * (static_cast<size_t>(jy) +
                                                       static_cast<size_t>(n) * jz);
                spec[idx] *= std::complex<double>(0.0, k);
            }
    return inverse(std::move(spec), n);
}

std::vector<double> resample(const std::vector<double>& field, int n_from, int n_to) {
    if (n_from == n_to) return field;
    cvec spec = forward(field, n_from);
    size_t total_to = static_cast<size_t>(n_to) * n_to * n_to;
    cvec out(total_to, 0.0);
    // The unnormalized forward carries a factor n_from^3 that the inverse
    // will divide out as n_to^3.
    double ratio = static_cast<double>(total_to) /
                   (static_cast<double>(n_from) * n_from * n_from);
    int kmax = std::min(n_from, n_to) / 2 - 1;  // drop Nyquist shells entirely
    for (int kz = -kmax; kz <= kmax; ++kz)
        for (int ky = -kmax; ky <= kmax; ++ky)
            for (int kx = -kmax; kx <= kmax; ++kx) {
                auto bin = [](int k, int n) { return k >= 0 ? k : k + n; };
                size_t src = static_cast<size_t>(bin(kx, n_from)) +
                             static_cast<size_t>(n_from) *
                                 (static_cast<size_t>(bin(ky, n_from)) +
                                  static_cast<size_t>(n_from) * bin(kz, n_from));
                size_t dst = static_cast<size_t>(bin(kx, n_to)) +
                             static_cast<size_t>(n_to) *
                                 (static_cast<size_t>(bin(ky, n_to)) +
                                  static_cast<size_t>(n_to) * bin(kz, n_to));
                out[dst] = spec[src] * ratio;
            }
    return inverse(std::move(out), n_to);
}

}  // namespace hpt::spectral
