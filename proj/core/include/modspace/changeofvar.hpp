#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "modspace/norms.hpp"

namespace modspace {

/// The operator phi^*: u -> u o phi, performed symbolically (no resampling).
FunctionExpr compose(const FunctionExpr& u, const AffineMap& phi);
FunctionExpr compose(const FunctionExpr& u, const PiecewiseAffineMap& phi);
FunctionExpr compose(const FunctionExpr& u, const NonlinearMap& phi);

/// Max absolute deviation, over pts, between V_g(u o phi)(x,w) and
///   (1/|det A|) e^{-2 pi i w.A^{-1}b} V_{g o A^{-1}} u(Ax+b, (A^T)^{-1} w),
/// both sides by Riemann quadrature on quad_grid.
double covariance_check(const FunctionExpr& u, const WindowSpec& g,
                        const AffineMap& phi,
                        const std::vector<std::pair<Point, Point>>& pts,
                        const Grid& quad_grid);

/// modulation_norm(u o phi) / modulation_norm(u). Throws DomainError when the
/// denominator vanishes.
double affine_invariance_ratio(const FunctionExpr& u, const AffineMap& phi,
                               const NormParams& params, const Grid& grid,
                               int oversample = 8);
double affine_invariance_ratio(const FunctionExpr& u, const AffineMap& phi,
                               const NormParams& params);

/// Extremal norm ratios of phi^* over a family at exponents (p,p).
/// Returns (max ratio, min ratio).
std::pair<double, double> piecewise_boundedness_sweep(
    const PiecewiseAffineMap& phi, const std::vector<FunctionExpr>& family,
    double p, const Grid& grid, int oversample = 8);
std::pair<double, double> piecewise_boundedness_sweep(
    const PiecewiseAffineMap& phi, const std::vector<FunctionExpr>& family,
    double p);

/// Norm-growth probe for a one-parameter family of nonlinear maps: returns
/// (lambda, ||u o phi_lambda|| / ||u||) per sweep value. Each map must be
/// injective on the support of u (checked via the 1-d derivative bound
/// lambda * radius < 1/2 for the quadratic family).
std::vector<std::pair<double, double>> nonlinear_blowup_sweep(
    const std::function<NonlinearMap(double)>& phi_family, const FunctionExpr& u,
    const NormParams& params, const std::vector<double>& lambdas,
    const Grid& grid, int oversample = 8);

/// The modulation-side realization of the same probe: ratios
/// ||chirp(lambda) * bump(1)|| / ||bump(1)|| in M^{p,q}.
std::vector<std::pair<double, double>> chirp_blowup_sweep(
    const std::vector<double>& lambdas, const NormParams& params,
    const Grid& grid, int oversample = 8);
std::vector<std::pair<double, double>> chirp_blowup_sweep(
    const std::vector<double>& lambdas, const NormParams& params);

} // namespace modspace
