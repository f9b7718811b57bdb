#pragma once

#include <functional>

#include "modspace/grid.hpp"
#include "modspace/maps.hpp"

namespace modspace {

/// Closed-form evaluable function R^d -> C. Built from leaf constructors and
/// combinators; evaluation is exact pointwise and carries no grid dependence.
/// Tracks a compact-support flag with a radius R such that the function
/// evaluates to exactly 0 for |t| > R.
class FunctionExpr {
public:
    using Eval = std::function<cplx(const Point&)>;

    FunctionExpr() : FunctionExpr(zero()) {}

    cplx operator()(const Point& t) const { return eval_(t); }

    bool compactly_supported() const { return compact_; }
    double support_radius() const;

    // -- leaves ------------------------------------------------------------
    static FunctionExpr zero();
    static FunctionExpr constant(cplx c);
    /// e^{-pi |t/width|^2}
    static FunctionExpr gaussian(double width);
    /// e^{1 + 1/(|t/R|^2 - 1)} for |t| < R, 0 outside; peak 1 at 0.
    static FunctionExpr bump(double radius);
    /// e^{i pi rate |t|^2}
    static FunctionExpr chirp(double rate);
    /// e^{2 pi i freq.t}
    static FunctionExpr plane_wave(const Point& freq);
    static FunctionExpr plane_wave(double freq);
    /// Characteristic function of a half-open cube.
    static FunctionExpr indicator(const Box& cube);
    /// 1 on B_{2R}(0), raised-cosine collar down to 0 at |t| = 2R+1.
    static FunctionExpr plateau(double radius);

    // -- combinators -------------------------------------------------------
    FunctionExpr operator+(const FunctionExpr& g) const;
    FunctionExpr operator*(const FunctionExpr& g) const;
    FunctionExpr scaled(cplx a) const;
    FunctionExpr conjugated() const;
    /// t -> f(t - b)
    FunctionExpr translated(const Point& b) const;
    FunctionExpr translated(double b) const;
    /// t -> f(phi(t)), support radius propagated through the inverse map.
    FunctionExpr precompose(const AffineMap& phi) const;
    FunctionExpr precompose(const PiecewiseAffineMap& phi) const;
    /// General differentiable map; not proper in general, so the
    /// compact-support flag is dropped.
    FunctionExpr precompose(const NonlinearMap& phi) const;

private:
    FunctionExpr(Eval e, bool compact, double radius)
        : eval_(std::move(e)), compact_(compact), radius_(radius) {}

    Eval eval_;
    bool compact_ = false;
    double radius_ = 0.0;
};

/// Pointwise evaluation of f at every grid point.
/// Throws EvaluationError naming the point if any value is non-finite.
SampledSignal sample(const FunctionExpr& f, const Grid& grid);

} // namespace modspace
