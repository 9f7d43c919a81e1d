#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hodge {

using Complex = std::complex<double>;

bool is_power_of_two(std::size_t n);

// In-place n-dimensional transform of a row-major N^dims array (axis 0
// slowest):
//   out[j] = sum_m in[m] * exp(sign * 2 pi i <m, j> / N), unnormalized.
// Backed by FFTW; safe to call from several threads at once.
void fft_nd(std::vector<Complex> &data, int dims, std::size_t n, int sign);

} // namespace hodge
