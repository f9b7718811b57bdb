#include "modspace/stft.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include "modspace/parallel.hpp"

namespace modspace {

namespace {
constexpr double pi = std::numbers::pi;
}

struct WindowSpec::Cache {
    std::mutex mutex;
    std::optional<std::pair<Grid, double>> ghat_l1;
};

WindowSpec::WindowSpec(Kind k, FunctionExpr e)
    : kind_(k), expr_(std::move(e)), cache_(std::make_shared<Cache>()) {}

WindowSpec WindowSpec::gaussian(double width) {
    return WindowSpec(Kind::Gaussian, FunctionExpr::gaussian(width));
}

WindowSpec WindowSpec::normalized_gaussian(int dim) {
    const double scale = std::pow(2.0, dim / 4.0);
    return WindowSpec(Kind::Gaussian, FunctionExpr::gaussian(1.0).scaled(scale));
}

WindowSpec WindowSpec::plateau(double radius) {
    return WindowSpec(Kind::Plateau, FunctionExpr::plateau(radius));
}

WindowSpec WindowSpec::custom(FunctionExpr expr) {
    return WindowSpec(Kind::Custom, std::move(expr));
}

double WindowSpec::ghat_l1(const Grid& grid) const {
    std::lock_guard lock(cache_->mutex);
    if (cache_->ghat_l1 && cache_->ghat_l1->first == grid)
        return cache_->ghat_l1->second;
    const Spectrum sp = forward_ft(sample(expr_, grid));
    double acc = 0.0;
    for (const cplx& v : sp.values) acc += std::abs(v);
    const double norm = acc * sp.grid.cell();
    cache_->ghat_l1 = {grid, norm};
    return norm;
}

TFMatrix::TFMatrix(Grid tg, Grid fg, std::vector<cplx> v)
    : time_grid(tg), freq_grid(fg), values(std::move(v)) {
    if (values.size() != time_grid.size() * freq_grid.size())
        throw ParameterError("TFMatrix: values size does not match lattice dimensions");
    for (const cplx& x : values)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw EvaluationError("TFMatrix: non-finite entry");
}

TFMatrix stft(const SampledSignal& f, const WindowSpec& g, const Grid& time_grid) {
    const Grid& quad = f.grid;
    if (time_grid.dim() != quad.dim())
        throw ParameterError("stft: time lattice dimension does not match signal");
    const FunctionExpr& win = g.expr();
    if (win.compactly_supported() && quad.extent() < 2.0 * win.support_radius())
        throw CoverageError("stft: quadrature grid extent " +
                            std::to_string(quad.extent()) +
                            " cannot cover the window support (radius " +
                            std::to_string(win.support_radius()) + ")");

    const Grid freq = quad.reciprocal();
    const std::size_t n_time = time_grid.size();
    const std::size_t n_freq = freq.size();
    const std::size_t n_quad = quad.size();
    std::vector<cplx> out(n_time * n_freq);

    // When the time lattice is an integer-aligned sublattice of the sampling
    // grid (the default), every window translate samples the window on the
    // same 1-d lattice; tabulate it once instead of re-evaluating per row.
    bool aligned = quad.dim() == 1;
    long stride_ratio = 0;
    if (aligned) {
        const double ratio = time_grid.spacing() / quad.spacing();
        stride_ratio = std::lround(ratio);
        aligned = std::abs(ratio - static_cast<double>(stride_ratio)) < 1e-9 &&
                  std::abs(time_grid.origin().c[0] - quad.origin().c[0]) <
                      1e-12 * quad.spacing();
    }

    if (aligned) {
        const int n = quad.n_per_axis();
        const int m = time_grid.n_per_axis();
        const long bound = n / 2 + stride_ratio * (m / 2) + 1;
        std::vector<cplx> wtab(static_cast<std::size_t>(2 * bound + 1));
        for (long i = -bound; i <= bound; ++i)
            wtab[static_cast<std::size_t>(i + bound)] =
                std::conj(win(Point(quad.spacing() * static_cast<double>(i))));

        parallel_for(n_time, [&](std::size_t j) {
            const long dj = stride_ratio * (static_cast<long>(j) - m / 2);
            std::vector<cplx> slice(n_quad);
            for (int k = 0; k < n; ++k) {
                const long i = (k - n / 2) - dj;
                slice[static_cast<std::size_t>(k)] =
                    f.values[static_cast<std::size_t>(k)] *
                    wtab[static_cast<std::size_t>(i + bound)];
            }
            const Spectrum row = forward_ft(SampledSignal(quad, std::move(slice)));
            std::copy(row.values.begin(), row.values.end(), out.begin() + j * n_freq);
        });
    } else {
        parallel_for(n_time, [&](std::size_t j) {
            const Point x = time_grid.point(j);
            std::vector<cplx> slice(n_quad);
            for (std::size_t t = 0; t < n_quad; ++t) {
                const Point pt = quad.point(t);
                slice[t] = f.values[t] * std::conj(win(pt - x));
            }
            const Spectrum row = forward_ft(SampledSignal(quad, std::move(slice)));
            std::copy(row.values.begin(), row.values.end(), out.begin() + j * n_freq);
        });
    }

    return TFMatrix(time_grid, freq, std::move(out));
}

TFMatrix stft(const FunctionExpr& f, const WindowSpec& g, const Grid& time_grid,
              const Grid& freq_grid) {
    const Grid quad = freq_grid.reciprocal();
    return stft(sample(f, quad), g, time_grid);
}

cplx stft_point(const FunctionExpr& f, const FunctionExpr& g, const Point& x,
                const Point& omega, const Grid& quad_grid) {
    cplx acc(0.0);
    const std::size_t n = quad_grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point t = quad_grid.point(i);
        const double phase = -2.0 * pi * (omega.c[0] * t.c[0] + omega.c[1] * t.c[1]);
        acc += f(t) * std::conj(g(t - x)) * std::polar(1.0, phase);
    }
    return acc * quad_grid.cell();
}

std::pair<double, double> stft_magnitude_identity_check(const FunctionExpr& f,
                                                        const WindowSpec& g,
                                                        const Point& x,
                                                        const Point& omega,
                                                        const Grid& grid) {
    const double lhs = std::abs(stft_point(f, g.expr(), x, omega, grid));

    // |V_ghat fhat(w, -x)| = |int fhat(xi) conj(ghat(xi - w)) e^{2 pi i x.xi} dxi|.
    // ghat(xi - w) at lattice xi is the transform of g modulated by w.
    const Spectrum fhat = forward_ft(sample(f, grid));
    const FunctionExpr g_mod = g.expr() * FunctionExpr::plane_wave(omega);
    const Spectrum ghat_shift = forward_ft(sample(g_mod, grid));
    cplx acc(0.0);
    for (std::size_t i = 0; i < fhat.values.size(); ++i) {
        const Point xi = fhat.grid.point(i);
        const double phase = 2.0 * pi * (x.c[0] * xi.c[0] + x.c[1] * xi.c[1]);
        acc += fhat.values[i] * std::conj(ghat_shift.values[i]) * std::polar(1.0, phase);
    }
    const double rhs = std::abs(acc * fhat.grid.cell());
    return {lhs, rhs};
}

} // namespace modspace
