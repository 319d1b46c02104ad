#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gnx::fft {

// Unnormalized in-place DFT on a rank-d row-major array (n points per axis,
// same n on every axis). sign = -1 for the forward exponent exp(-2*pi*i jk/n),
// sign = +1 for the backward exponent. Plans are cached internally; safe to
// call from multiple threads.
void dft(std::complex<double>* data, int rank, int n, int sign);

}  // namespace gnx::fft
