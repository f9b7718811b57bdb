#include "modspace/multiplier.hpp"

#include <cmath>
#include <string>

namespace modspace {

MultiplierSymbol MultiplierSymbol::cube_indicator(const Box& box) {
    return MultiplierSymbol(Kind::CubeIndicator, [box](const Point& xi) {
        return cplx(box.contains(xi) ? 1.0 : 0.0);
    });
}

MultiplierSymbol MultiplierSymbol::chirp(std::function<double(const Point&)> phase) {
    return MultiplierSymbol(Kind::Chirp, [phase = std::move(phase)](const Point& xi) {
        return std::polar(1.0, phase(xi));
    });
}

MultiplierSymbol MultiplierSymbol::chirp(const AffineMap& phi) {
    return chirp([phi](const Point& xi) {
        const Point y = phi.apply(xi);
        return y.c[0] + y.c[1];
    });
}

MultiplierSymbol MultiplierSymbol::chirp(const NonlinearMap& phi) {
    return chirp([phi](const Point& xi) {
        const Point y = phi.apply(xi);
        return y.c[0] + y.c[1];
    });
}

MultiplierSymbol MultiplierSymbol::constant(cplx c) {
    return MultiplierSymbol(Kind::Constant, [c](const Point&) { return c; });
}

MultiplierSymbol MultiplierSymbol::custom(Eval sigma) {
    return MultiplierSymbol(Kind::Custom, std::move(sigma));
}

SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const SampledSignal& f) {
    Spectrum sp = forward_ft(f);
    for (std::size_t i = 0; i < sp.values.size(); ++i) {
        const Point xi = sp.grid.point(i);
        const cplx s = sigma(xi);
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw EvaluationError("apply_multiplier: symbol non-finite at frequency (" +
                                  std::to_string(xi.c[0]) + ", " +
                                  std::to_string(xi.c[1]) + ")");
        sp.values[i] *= s;
    }
    return inverse_ft(sp, f.grid.origin());
}

SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const FunctionExpr& f,
                               const Grid& grid) {
    return apply_multiplier(sigma, sample(f, grid));
}

SampledSignal apply_multiplier(const MultiplierSymbol& sigma, const FunctionExpr& f) {
    return apply_multiplier(sigma, f, default_grid());
}

double multiplier_norm_ratio(const MultiplierSymbol& sigma,
                             const std::vector<FunctionExpr>& family,
                             const NormParams& params, const Grid& grid,
                             int oversample) {
    if (family.empty())
        throw ParameterError("multiplier_norm_ratio: empty family");
    const WindowSpec g = WindowSpec::normalized_gaussian(grid.dim());
    double max_ratio = 0.0;
    for (const FunctionExpr& f : family) {
        const SampledSignal fs = sample(f, grid);
        const double denom = modulation_norm(fs, g, params, oversample);
        if (denom <= 0.0)
            throw DomainError("multiplier_norm_ratio: family member with zero norm");
        const double numer =
            modulation_norm(apply_multiplier(sigma, fs), g, params, oversample);
        max_ratio = std::max(max_ratio, numer / denom);
    }
    return max_ratio;
}

double multiplier_norm_ratio(const MultiplierSymbol& sigma,
                             const std::vector<FunctionExpr>& family,
                             const NormParams& params) {
    return multiplier_norm_ratio(sigma, family, params, default_grid());
}

} // namespace modspace
