#pragma once

#include <limits>

#include "modspace/defaults.hpp"
#include "modspace/stft.hpp"

namespace modspace {

constexpr double inf = std::numeric_limits<double>::infinity();

/// Mixed-norm exponents; each is infinity or a real >= 1.
struct NormParams {
    double p = 2.0;
    double q = 2.0;

    NormParams() = default;
    NormParams(double p_, double q_);
};

/// Lebesgue measure of the ball B_R(0) in R^d (2R for d=1, pi R^2 for d=2).
double ball_volume(int dim, double radius);

/// Riemann-sum L^{p,q} norm of a TFMatrix: inner p-quadrature over the time
/// axis, outer q-quadrature over frequency; exact maxima when an exponent is
/// infinite. Degree-1 homogeneous.
double mixed_norm(const TFMatrix& m, const NormParams& params);

/// ||f||_{M^{p,q}} via the STFT on the default lattices for the grid.
/// Window defaults to the L^2-normalized Gaussian.
double modulation_norm(const FunctionExpr& f, const WindowSpec& g,
                       const NormParams& params, const Grid& grid,
                       int oversample = 8);
double modulation_norm(const FunctionExpr& f, const WindowSpec& g,
                       const NormParams& params);
double modulation_norm(const FunctionExpr& f, const NormParams& params);

/// Same norm for a pre-sampled signal on its own grid.
double modulation_norm(const SampledSignal& f, const WindowSpec& g,
                       const NormParams& params, int oversample = 8);

/// ||f||_{A_q} = L^q norm of the Fourier transform of f.
double fourier_lebesgue_norm(const FunctionExpr& f, double q, const Grid& grid);
double fourier_lebesgue_norm(const FunctionExpr& f, double q);

/// Two-sided local equivalence between M^{p,q} and FL^q on B_R(0), with the
/// explicit constants of the proof.
struct EquivalenceReport {
    double r = 0.0;           // support radius of u
    NormParams params;
    double mod_norm = 0.0;    // M^{p,q} norm with the bump(R) window
    double mod_norm_plateau = 0.0; // M^{p,q} norm with the plateau(R) window
    double fl_norm = 0.0;     // FL^q norm
    double forward_constant = 0.0; // |B_{2R}(0)|^{1/p} ||ghat||_{L^1}
    double reverse_constant = 0.0; // |B_R(0)|^{-1/p}
    bool forward_satisfied = false;
    bool reverse_satisfied = false;
};

/// Quadrature slack applied to both directions of the equivalence check.
constexpr double kEquivalenceSlack = 0.02;

/// Checks ||u||_{M^{p,q}} <= |B_{2R}|^{1/p} ||uhat||_{L^q} ||ghat||_{L^1}
/// (bump(R) window) and ||uhat||_{L^q} <= |B_R|^{-1/p} ||V_g u||_{L^{p,q}}
/// (plateau(R) window). Throws DomainError if u lacks the compact-support flag.
EquivalenceReport local_equivalence_report(const FunctionExpr& u,
                                           const NormParams& params,
                                           const Grid& grid, int oversample = 8);
EquivalenceReport local_equivalence_report(const FunctionExpr& u,
                                           const NormParams& params);

} // namespace modspace
