#include "modspace/spectral.hpp"

#include <cmath>
#include <numbers>

#include "modspace/fft.hpp"

namespace modspace {

namespace {

constexpr double pi = std::numbers::pi;

// One separable pass of the centered continuous-FT bookkeeping along `axis`:
//   F_m = dt * e^{-2 pi i o w_m} * (-1)^m * DFT_m( x_k * (-1)^k )
// with w_m = dw*(m - n/2), dw = 1/(n*dt). `invert` runs the exact algebraic
// inverse of the same pass.
void transform_axis(std::vector<cplx>& v, int n, int dim, int axis, double origin,
                    double dt, bool invert) {
    const double dw = 1.0 / (n * dt);
    const std::size_t count = (dim == 1) ? 1 : static_cast<std::size_t>(n);
    std::vector<cplx> line(static_cast<std::size_t>(n));

    // strides for row-major layout, axis 0 slowest
    const std::size_t stride = (dim == 1 || axis == 1) ? 1 : static_cast<std::size_t>(n);
    const std::size_t line_step =
        (dim == 1) ? 0 : (axis == 1 ? static_cast<std::size_t>(n) : 1);

    for (std::size_t l = 0; l < count; ++l) {
        const std::size_t base = l * line_step;
        for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = v[base + k * stride];

        if (!invert) {
            for (int k = 0; k < n; ++k)
                if (k & 1) line[static_cast<std::size_t>(k)] = -line[static_cast<std::size_t>(k)];
            fft_radix2(line, false);
            for (int m = 0; m < n; ++m) {
                cplx f = line[static_cast<std::size_t>(m)] * dt;
                if (origin != 0.0) {
                    const double w = dw * (m - n / 2);
                    f *= std::polar(1.0, -2.0 * pi * origin * w);
                }
                if (m & 1) f = -f;
                line[static_cast<std::size_t>(m)] = f;
            }
        } else {
            for (int m = 0; m < n; ++m) {
                cplx y = line[static_cast<std::size_t>(m)] / dt;
                if (origin != 0.0) {
                    const double w = dw * (m - n / 2);
                    y *= std::polar(1.0, 2.0 * pi * origin * w);
                }
                if (m & 1) y = -y;
                line[static_cast<std::size_t>(m)] = y;
            }
            fft_radix2(line, true);
            const double scale = 1.0 / n;
            for (int k = 0; k < n; ++k) {
                cplx x = line[static_cast<std::size_t>(k)] * scale;
                if (k & 1) x = -x;
                line[static_cast<std::size_t>(k)] = x;
            }
        }

        for (int k = 0; k < n; ++k) v[base + k * stride] = line[static_cast<std::size_t>(k)];
    }
}

} // namespace

Spectrum::Spectrum(Grid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw ParameterError("Spectrum: values length does not match grid cardinality");
}

Spectrum forward_ft(const SampledSignal& s) {
    const Grid& g = s.grid;
    std::vector<cplx> v = s.values;
    for (int axis = 0; axis < g.dim(); ++axis)
        transform_axis(v, g.n_per_axis(), g.dim(), axis, g.origin().c[axis], g.spacing(),
                       false);
    return Spectrum(g.reciprocal(), std::move(v));
}

SampledSignal inverse_ft(const Spectrum& sp, Point time_origin) {
    const Grid& fg = sp.grid;
    const double dt = 1.0 / (fg.n_per_axis() * fg.spacing());
    Grid tg(fg.dim(), fg.n_per_axis(), dt, time_origin);
    std::vector<cplx> v = sp.values;
    for (int axis = 0; axis < fg.dim(); ++axis)
        transform_axis(v, fg.n_per_axis(), fg.dim(), axis, tg.origin().c[axis], dt, true);
    return SampledSignal(tg, std::move(v));
}

std::pair<double, double> parseval_check(const SampledSignal& s) {
    const Spectrum sp = forward_ft(s);
    // the spectrum is a SampledSignal on the reciprocal grid for norm purposes
    SampledSignal hat(sp.grid, sp.values);
    return {l2_norm(s), l2_norm(hat)};
}

} // namespace modspace
