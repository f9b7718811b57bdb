#include "modspace/fft.hpp"

#include <cmath>
#include <numbers>

#include "modspace/errors.hpp"

namespace modspace {

void fft_radix2(std::span<std::complex<double>> data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw ParameterError("fft_radix2: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    // Twiddles computed per element (no accumulated rotation error), cached
    // per thread for repeated same-size transforms.
    thread_local std::vector<std::complex<double>> cache;
    thread_local std::size_t cache_n = 0;
    thread_local bool cache_inverse = false;
    if (cache_n != n || cache_inverse != inverse) {
        const double sign = inverse ? 1.0 : -1.0;
        cache.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(n);
            cache[k] = std::complex<double>(std::cos(ang), std::sin(ang));
        }
        cache_n = n;
        cache_inverse = inverse;
    }
    const std::vector<std::complex<double>>& tw = cache;

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> w = tw[k * stride];
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
}

} // namespace modspace
