#include "modspace/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace modspace {

NormParams::NormParams(double p_, double q_) : p(p_), q(q_) {
    const auto valid = [](double e) {
        return e == inf || (std::isfinite(e) && e >= 1.0);
    };
    if (!valid(p) || !valid(q))
        throw ParameterError("NormParams: p and q must each be inf or a real >= 1");
}

double ball_volume(int dim, double radius) {
    if (dim == 1) return 2.0 * radius;
    if (dim == 2) return std::numbers::pi * radius * radius;
    throw ParameterError("ball_volume: dim must be 1 or 2");
}

double mixed_norm(const TFMatrix& m, const NormParams& params) {
    const std::size_t nt = m.time_grid.size();
    const std::size_t nf = m.freq_grid.size();
    const double dx = m.time_grid.cell();
    const double dw = m.freq_grid.cell();
    const double p = params.p, q = params.q;

    // inner p-norm over time per frequency column, walking row-major
    std::vector<double> inner(nf, 0.0);
    if (p == inf) {
        for (std::size_t j = 0; j < nt; ++j)
            for (std::size_t k = 0; k < nf; ++k)
                inner[k] = std::max(inner[k], std::abs(m.values[j * nf + k]));
    } else if (p == 1.0) {
        for (std::size_t j = 0; j < nt; ++j)
            for (std::size_t k = 0; k < nf; ++k)
                inner[k] += std::abs(m.values[j * nf + k]);
        for (double& v : inner) v *= dx;
    } else if (p == 2.0) {
        for (std::size_t j = 0; j < nt; ++j)
            for (std::size_t k = 0; k < nf; ++k)
                inner[k] += std::norm(m.values[j * nf + k]);
        for (double& v : inner) v = std::sqrt(v * dx);
    } else {
        for (std::size_t j = 0; j < nt; ++j)
            for (std::size_t k = 0; k < nf; ++k)
                inner[k] += std::pow(std::abs(m.values[j * nf + k]), p);
        for (double& v : inner) v = std::pow(v * dx, 1.0 / p);
    }

    if (q == inf) {
        double mx = 0.0;
        for (double v : inner) mx = std::max(mx, v);
        return mx;
    }
    double acc = 0.0;
    for (double v : inner) acc += std::pow(v, q);
    return std::pow(acc * dw, 1.0 / q);
}

double modulation_norm(const SampledSignal& f, const WindowSpec& g,
                       const NormParams& params, int oversample) {
    const Grid lattice = default_time_lattice(f.grid, oversample);
    return mixed_norm(stft(f, g, lattice), params);
}

double modulation_norm(const FunctionExpr& f, const WindowSpec& g,
                       const NormParams& params, const Grid& grid, int oversample) {
    return modulation_norm(sample(f, grid), g, params, oversample);
}

double modulation_norm(const FunctionExpr& f, const WindowSpec& g,
                       const NormParams& params) {
    return modulation_norm(f, g, params, default_grid());
}

double modulation_norm(const FunctionExpr& f, const NormParams& params) {
    return modulation_norm(f, WindowSpec::normalized_gaussian(1), params,
                           default_grid());
}

double fourier_lebesgue_norm(const FunctionExpr& f, double q, const Grid& grid) {
    NormParams check(q, q); // validates q
    const Spectrum sp = forward_ft(sample(f, grid));
    if (q == inf) {
        double mx = 0.0;
        for (const cplx& v : sp.values) mx = std::max(mx, std::abs(v));
        return mx;
    }
    double acc = 0.0;
    for (const cplx& v : sp.values) acc += std::pow(std::abs(v), q);
    return std::pow(acc * sp.grid.cell(), 1.0 / q);
}

double fourier_lebesgue_norm(const FunctionExpr& f, double q) {
    return fourier_lebesgue_norm(f, q, default_grid());
}

namespace {
// |B|^{1/p} with the p = inf convention |B|^0 = 1.
double pow_inv(double base, double p) {
    return p == inf ? 1.0 : std::pow(base, 1.0 / p);
}
} // namespace

EquivalenceReport local_equivalence_report(const FunctionExpr& u,
                                           const NormParams& params,
                                           const Grid& grid, int oversample) {
    if (!u.compactly_supported())
        throw DomainError("local_equivalence_report: u must carry the "
                          "compact-support flag");
    EquivalenceReport rep;
    rep.r = u.support_radius();
    rep.params = params;

    const WindowSpec fwd_window = WindowSpec::custom(FunctionExpr::bump(rep.r));
    const WindowSpec rev_window = WindowSpec::plateau(rep.r);

    rep.mod_norm = modulation_norm(u, fwd_window, params, grid, oversample);
    rep.mod_norm_plateau = modulation_norm(u, rev_window, params, grid, oversample);
    rep.fl_norm = fourier_lebesgue_norm(u, params.q, grid);

    const double ghat_l1 = fwd_window.ghat_l1(grid);
    rep.forward_constant =
        pow_inv(ball_volume(grid.dim(), 2.0 * rep.r), params.p) * ghat_l1;
    rep.reverse_constant =
        1.0 / pow_inv(ball_volume(grid.dim(), rep.r), params.p);

    rep.forward_satisfied =
        rep.mod_norm <= (1.0 + kEquivalenceSlack) * rep.forward_constant * rep.fl_norm;
    rep.reverse_satisfied =
        rep.fl_norm <= (1.0 + kEquivalenceSlack) * rep.reverse_constant * rep.mod_norm_plateau;
    return rep;
}

EquivalenceReport local_equivalence_report(const FunctionExpr& u,
                                           const NormParams& params) {
    return local_equivalence_report(u, params, default_grid());
}

} // namespace modspace
