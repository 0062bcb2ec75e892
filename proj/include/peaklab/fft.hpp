#pragma once

#include <complex>
#include <vector>

namespace peaklab {

/// In-place forward radix-2 FFT (size must be a power of two):
/// X_k = sum_j x_j e^{-2 pi i j k / N}.
void fft_radix2(std::vector<std::complex<double>>& data);

}  // namespace peaklab
