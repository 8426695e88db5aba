// Internal spectral helpers: cached FFTW plans for N^3 complex transforms,
// spectral differentiation and resampling.

#pragma once

#include <complex>
#include <vector>

namespace hpt::spectral {

using cvec = std::vector<std::complex<double>>;

// In-place 3D transform of an n^3 array (x fastest).  sign -1: forward,
// +1: inverse; the inverse is normalized by 1/n^3.
void fft3(cvec& data, int n, int sign);

cvec forward(const std::vector<double>& field, int n);
std::vector<double> inverse(cvec spec, int n);

// Integer wavenumber of FFT bin j (Nyquist bin maps to -n/2).
inline int wavenumber(int j, int n) { return j <= n / 2 ? j : j - n; }

// Spectral partial derivative along axis (0=x,1=y,2=z); the Nyquist mode is
// zeroed.
std::vector<double> derivative(const std::vector<double>& field, int n, int axis);

// Band-limited resampling between grids n_from^3 -> n_to^3 (zero padding up,
// spectral truncation down).
std::vector<double> resample(const std::vector<double>& field, int n_from, int n_to);

}  // namespace hpt::spectral
