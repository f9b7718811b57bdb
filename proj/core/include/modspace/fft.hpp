#pragma once

#include <complex>
#include <span>
#include <vector>

namespace modspace {

/// In-place radix-2 DFT, y_m = sum_k x_k e^{-2 pi i k m / n} (no scaling).
/// n must be a power of two.
void fft_radix2(std::span<std::complex<double>> data, bool inverse = false);

} // namespace modspace
