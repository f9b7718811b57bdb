#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "modspace/function_expr.hpp"
#include "modspace/spectral.hpp"

namespace modspace {

/// STFT analysis window. The default across the toolkit is the L^2-normalized
/// Gaussian 2^{d/4} e^{-pi|t|^2}.
class WindowSpec {
public:
    enum class Kind { Gaussian, Plateau, Custom };

    static WindowSpec gaussian(double width = 1.0);
    /// Identically 1 on B_{2R}(0), raised-cosine collar, 0 outside B_{2R+1}(0).
    static WindowSpec plateau(double radius);
    static WindowSpec custom(FunctionExpr expr);
    /// 2^{d/4} e^{-pi|t|^2}
    static WindowSpec normalized_gaussian(int dim);

    Kind kind() const { return kind_; }
    const FunctionExpr& expr() const { return expr_; }

    /// L^1 norm of the window's Fourier transform, computed on `grid` once
    /// and cached.
    double ghat_l1(const Grid& grid) const;

private:
    WindowSpec(Kind k, FunctionExpr e);

    Kind kind_;
    FunctionExpr expr_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// STFT values on a rectangular time-frequency lattice.
struct TFMatrix {
    Grid time_grid; // lattice of window positions x_j
    Grid freq_grid; // reciprocal grid of the sampling grid
    std::vector<cplx> values; // row-major, index (time flat, freq flat)

    TFMatrix(Grid tg, Grid fg, std::vector<cplx> v);

    cplx at(std::size_t time_idx, std::size_t freq_idx) const {
        return values[time_idx * freq_grid.size() + freq_idx];
    }
};

/// V_g f(x, y) = int f(t) conj(g(t-x)) e^{-2 pi i y t} dt on the lattice
/// time_grid x freq_grid. The quadrature grid for t is the reciprocal of
/// freq_grid; one forward_ft per time-lattice point. Rows are computed in
/// parallel (capped by MODSPACE_THREADS).
TFMatrix stft(const FunctionExpr& f, const WindowSpec& g, const Grid& time_grid,
              const Grid& freq_grid);

/// Same with pre-sampled values for f; the window is still evaluated in
/// closed form at the sample points.
TFMatrix stft(const SampledSignal& f, const WindowSpec& g, const Grid& time_grid);

/// Direct Riemann-sum evaluation of V_g f at a single point.
cplx stft_point(const FunctionExpr& f, const FunctionExpr& g, const Point& x,
                const Point& omega, const Grid& quad_grid);

/// (|V_g f(x,w)|, |V_ghat fhat(w,-x)|) — the STFT magnitude symmetry.
std::pair<double, double> stft_magnitude_identity_check(const FunctionExpr& f,
                                                        const WindowSpec& g,
                                                        const Point& x,
                                                        const Point& omega,
                                                        const Grid& grid);

} // namespace modspace
