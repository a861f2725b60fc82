#pragma once

#include <complex>
#include <vector>

namespace sqg {

using cdouble = std::complex<double>;

// In-place radix-2 complex FFT, length must be a power of two.
// sign = -1: forward (e^{-i k x}), sign = +1: inverse (unnormalized).
void fft_1d(cdouble* data, int n, int stride, int sign, const std::vector<cdouble>& twiddle);

// Twiddle table for length n and the given sign.
std::vector<cdouble> fft_twiddle(int n, int sign);

// 2D transforms on an n-by-n row-major array.
// forward: a[k] = (1/n^2) sum_j a[j] e^{-i k.x_j}  (lattice Fourier coefficients)
// inverse: a[j] = sum_k a[k] e^{+i k.x_j}
void fft2_forward(std::vector<cdouble>& a, int n);
void fft2_inverse(std::vector<cdouble>& a, int n);

} // namespace sqg
