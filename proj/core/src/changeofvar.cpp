#include "modspace/changeofvar.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace modspace {

namespace {
constexpr double pi = std::numbers::pi;
}

FunctionExpr compose(const FunctionExpr& u, const AffineMap& phi) {
    return u.precompose(phi);
}
FunctionExpr compose(const FunctionExpr& u, const PiecewiseAffineMap& phi) {
    return u.precompose(phi);
}
FunctionExpr compose(const FunctionExpr& u, const NonlinearMap& phi) {
    return u.precompose(phi);
}

double covariance_check(const FunctionExpr& u, const WindowSpec& g,
                        const AffineMap& phi,
                        const std::vector<std::pair<Point, Point>>& pts,
                        const Grid& quad_grid) {
    const FunctionExpr pulled = compose(u, phi);
    const AffineMap inv = phi.inverse();
    // g tilde = g o A^{-1}: linear part of the inverse only
    const AffineMap inv_linear(phi.dim(), inv.matrix(),
                               phi.dim() == 1 ? Point(0.0) : Point(0.0, 0.0));
    const FunctionExpr g_tilde = g.expr().precompose(inv_linear);
    const Point a_inv_b = inv_linear.apply_linear(phi.offset());

    double max_dev = 0.0;
    for (const auto& [x, omega] : pts) {
        const cplx lhs = stft_point(pulled, g.expr(), x, omega, quad_grid);
        const Point xw = phi.apply(x);
        const Point wt = phi.apply_transpose_inverse(omega);
        const double phase =
            -2.0 * pi * (omega.c[0] * a_inv_b.c[0] + omega.c[1] * a_inv_b.c[1]);
        const cplx rhs = std::polar(1.0 / std::abs(phi.det()), phase) *
                         stft_point(u, g_tilde, xw, wt, quad_grid);
        max_dev = std::max(max_dev, std::abs(lhs - rhs));
    }
    return max_dev;
}

double affine_invariance_ratio(const FunctionExpr& u, const AffineMap& phi,
                               const NormParams& params, const Grid& grid,
                               int oversample) {
    const WindowSpec g = WindowSpec::normalized_gaussian(grid.dim());
    const double denom = modulation_norm(u, g, params, grid, oversample);
    if (denom <= 0.0)
        throw DomainError("affine_invariance_ratio: zero modulation norm of u");
    const double numer = modulation_norm(compose(u, phi), g, params, grid, oversample);
    return numer / denom;
}

double affine_invariance_ratio(const FunctionExpr& u, const AffineMap& phi,
                               const NormParams& params) {
    return affine_invariance_ratio(u, phi, params, default_grid());
}

std::pair<double, double> piecewise_boundedness_sweep(
    const PiecewiseAffineMap& phi, const std::vector<FunctionExpr>& family,
    double p, const Grid& grid, int oversample) {
    if (family.empty())
        throw ParameterError("piecewise_boundedness_sweep: empty family");
    const NormParams params(p, p);
    const WindowSpec g = WindowSpec::normalized_gaussian(grid.dim());
    double max_ratio = 0.0;
    double min_ratio = inf;
    for (const FunctionExpr& u : family) {
        const double denom = modulation_norm(u, g, params, grid, oversample);
        if (denom <= 0.0)
            throw DomainError("piecewise_boundedness_sweep: family member with "
                              "zero norm");
        const double numer =
            modulation_norm(compose(u, phi), g, params, grid, oversample);
        const double r = numer / denom;
        max_ratio = std::max(max_ratio, r);
        min_ratio = std::min(min_ratio, r);
    }
    return {max_ratio, min_ratio};
}

std::pair<double, double> piecewise_boundedness_sweep(
    const PiecewiseAffineMap& phi, const std::vector<FunctionExpr>& family,
    double p) {
    return piecewise_boundedness_sweep(phi, family, p, default_grid());
}

namespace {

// Uniform Jacobian-sign check on B_rho(0): rejects maps that fold over the
// support of u.
void require_injective_on_support(const NonlinearMap& phi, double rho,
                                  double lambda) {
    const int samples = 201;
    double first_sign = 0.0;
    for (int i = 0; i < samples; ++i) {
        Point x;
        x.dim = phi.dim();
        const double s = -rho + 2.0 * rho * i / (samples - 1);
        x.c[0] = s;
        if (phi.dim() == 2) x.c[1] = 0.0;
        const auto J = phi.jacobian(x);
        const double det = phi.dim() == 1 ? J[0] : J[0] * J[3] - J[1] * J[2];
        if (std::abs(det) < 1e-9)
            throw DomainError("nonlinear_blowup_sweep: map with lambda = " +
                              std::to_string(lambda) +
                              " has a vanishing Jacobian on the support");
        const double sign = det > 0 ? 1.0 : -1.0;
        if (first_sign == 0.0) first_sign = sign;
        else if (sign != first_sign)
            throw DomainError("nonlinear_blowup_sweep: map with lambda = " +
                              std::to_string(lambda) +
                              " is not injective on the support");
    }
}

} // namespace

std::vector<std::pair<double, double>> nonlinear_blowup_sweep(
    const std::function<NonlinearMap(double)>& phi_family, const FunctionExpr& u,
    const NormParams& params, const std::vector<double>& lambdas,
    const Grid& grid, int oversample) {
    if (!u.compactly_supported())
        throw DomainError("nonlinear_blowup_sweep: u must be compactly supported");
    const double rho = u.support_radius();
    const WindowSpec g = WindowSpec::normalized_gaussian(grid.dim());
    const double base = modulation_norm(u, g, params, grid, oversample);
    if (base <= 0.0)
        throw DomainError("nonlinear_blowup_sweep: zero modulation norm of u");

    std::vector<std::pair<double, double>> out;
    out.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const NonlinearMap phi = phi_family(lambda);
        require_injective_on_support(phi, rho, lambda);
        const double numer =
            modulation_norm(compose(u, phi), g, params, grid, oversample);
        out.emplace_back(lambda, numer / base);
    }
    return out;
}

std::vector<std::pair<double, double>> chirp_blowup_sweep(
    const std::vector<double>& lambdas, const NormParams& params,
    const Grid& grid, int oversample) {
    const FunctionExpr envelope = FunctionExpr::bump(1.0);
    const WindowSpec g = WindowSpec::normalized_gaussian(grid.dim());
    const double base = modulation_norm(envelope, g, params, grid, oversample);
    std::vector<std::pair<double, double>> out;
    out.reserve(lambdas.size());
    for (double lambda : lambdas) {
        const FunctionExpr u = FunctionExpr::chirp(lambda) * envelope;
        const double numer = modulation_norm(u, g, params, grid, oversample);
        out.emplace_back(lambda, numer / base);
    }
    return out;
}

std::vector<std::pair<double, double>> chirp_blowup_sweep(
    const std::vector<double>& lambdas, const NormParams& params) {
    return chirp_blowup_sweep(lambdas, params, default_grid());
}

} // namespace modspace
