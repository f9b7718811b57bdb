#pragma once

#include <functional>
#include <vector>

#include "modspace/norms.hpp"

namespace modspace {

/// Evaluable multiplier symbol sigma(xi). Indicators take values in {0,1}
/// exactly; chirp symbols are unimodular by construction.
class MultiplierSymbol {
public:
    enum class Kind { CubeIndicator, Chirp, Constant, Custom };

    using Eval = std::function<cplx(const Point&)>;

    static MultiplierSymbol cube_indicator(const Box& box);
    /// e^{i phase(xi)} for a real-valued phase.
    static MultiplierSymbol chirp(std::function<double(const Point&)> phase);
    /// e^{i phi(xi).e} for a scalar-valued image of an affine/nonlinear map:
    /// the 1-d symbol sigma_0(xi) = e^{i xi} is chirp of the identity.
    static MultiplierSymbol chirp(const AffineMap& phi);
    static MultiplierSymbol chirp(const NonlinearMap& phi);
    static MultiplierSymbol constant(cplx c);
    static MultiplierSymbol custom(Eval sigma);

    Kind kind() const { return kind_; }
    cplx operator()(const Point& xi) const { return sigma_(xi); }

private:
    MultiplierSymbol(Kind k, Eval e) : kind_(k), sigma_(std::move(e)) {}

    Kind kind_;
    Eval sigma_;
};

/// H_sigma f = inverse_ft(sigma * forward_ft(f)), with sigma sampled
/// pointwise on the frequency grid. Linear in f.
SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const SampledSignal& f);
SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const FunctionExpr& f,
                               const Grid& grid);
SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const FunctionExpr& f);

/// max over the family of ||H_sigma f||_{M^{p,q}} / ||f||_{M^{p,q}} — an
/// empirical operator-norm lower bound.
double multiplier_norm_ratio(const MultiplierSymbol& sigma,
                             const std::vector<FunctionExpr>& family,
                             const NormParams& params, const Grid& grid,
                             int oversample = 8);
double multiplier_norm_ratio(const MultiplierSymbol& sigma,
                             const std::vector<FunctionExpr>& family,
                             const NormParams& params);

} // namespace modspace
