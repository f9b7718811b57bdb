#include "modspace/function_expr.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace modspace {

namespace {
constexpr double pi = std::numbers::pi;
}

double FunctionExpr::support_radius() const {
    if (!compact_)
        throw DomainError("FunctionExpr: support_radius requested but the "
                          "compact-support flag is not set");
    return radius_;
}

FunctionExpr FunctionExpr::zero() {
    return FunctionExpr([](const Point&) { return cplx(0.0); }, true, 0.0);
}

FunctionExpr FunctionExpr::constant(cplx c) {
    return FunctionExpr([c](const Point&) { return c; }, false, 0.0);
}

FunctionExpr FunctionExpr::gaussian(double width) {
    if (!(width > 0.0))
        throw ParameterError("gaussian: width must be positive");
    const double inv_w2 = 1.0 / (width * width);
    return FunctionExpr(
        [inv_w2](const Point& t) { return cplx(std::exp(-pi * t.norm_sq() * inv_w2)); },
        false, 0.0);
}

FunctionExpr FunctionExpr::bump(double radius) {
    if (!(radius > 0.0))
        throw ParameterError("bump: radius must be positive");
    const double inv_r2 = 1.0 / (radius * radius);
    return FunctionExpr(
        [inv_r2](const Point& t) {
            const double s = t.norm_sq() * inv_r2;
            if (s >= 1.0) return cplx(0.0);
            return cplx(std::exp(1.0 + 1.0 / (s - 1.0)));
        },
        true, radius);
}

FunctionExpr FunctionExpr::chirp(double rate) {
    return FunctionExpr(
        [rate](const Point& t) {
            return std::polar(1.0, pi * rate * t.norm_sq());
        },
        false, 0.0);
}

FunctionExpr FunctionExpr::plane_wave(const Point& freq) {
    return FunctionExpr(
        [freq](const Point& t) {
            return std::polar(1.0, 2.0 * pi * (freq.c[0] * t.c[0] + freq.c[1] * t.c[1]));
        },
        false, 0.0);
}

FunctionExpr FunctionExpr::plane_wave(double freq) { return plane_wave(Point(freq)); }

FunctionExpr FunctionExpr::indicator(const Box& cube) {
    double r = 0.0;
    bool bounded = true;
    for (int a = 0; a < cube.dim; ++a) {
        if (!std::isfinite(cube.lo[a]) || !std::isfinite(cube.hi[a])) bounded = false;
        r = std::max({r, std::abs(cube.lo[a]), std::abs(cube.hi[a])});
    }
    return FunctionExpr(
        [cube](const Point& t) { return cplx(cube.contains(t) ? 1.0 : 0.0); },
        bounded, bounded ? r * std::sqrt(static_cast<double>(cube.dim)) : 0.0);
}

FunctionExpr FunctionExpr::plateau(double radius) {
    if (!(radius > 0.0))
        throw ParameterError("plateau: radius must be positive");
    return FunctionExpr(
        [radius](const Point& t) {
            const double r = t.norm();
            if (r <= 2.0 * radius) return cplx(1.0);
            if (r >= 2.0 * radius + 1.0) return cplx(0.0);
            const double c = std::cos(0.5 * pi * (r - 2.0 * radius));
            return cplx(c * c);
        },
        true, 2.0 * radius + 1.0);
}

FunctionExpr FunctionExpr::operator+(const FunctionExpr& g) const {
    const Eval f1 = eval_, f2 = g.eval_;
    const bool compact = compact_ && g.compact_;
    return FunctionExpr([f1, f2](const Point& t) { return f1(t) + f2(t); }, compact,
                        compact ? std::max(radius_, g.radius_) : 0.0);
}

FunctionExpr FunctionExpr::operator*(const FunctionExpr& g) const {
    const Eval f1 = eval_, f2 = g.eval_;
    const bool compact = compact_ || g.compact_;
    double r = 0.0;
    if (compact_ && g.compact_) r = std::min(radius_, g.radius_);
    else if (compact_) r = radius_;
    else if (g.compact_) r = g.radius_;
    return FunctionExpr([f1, f2](const Point& t) { return f1(t) * f2(t); }, compact, r);
}

FunctionExpr FunctionExpr::scaled(cplx a) const {
    const Eval f = eval_;
    return FunctionExpr([f, a](const Point& t) { return a * f(t); }, compact_, radius_);
}

FunctionExpr FunctionExpr::conjugated() const {
    const Eval f = eval_;
    return FunctionExpr([f](const Point& t) { return std::conj(f(t)); }, compact_,
                        radius_);
}

FunctionExpr FunctionExpr::translated(const Point& b) const {
    const Eval f = eval_;
    return FunctionExpr([f, b](const Point& t) { return f(t - b); }, compact_,
                        compact_ ? radius_ + b.norm() : 0.0);
}

FunctionExpr FunctionExpr::translated(double b) const { return translated(Point(b)); }

FunctionExpr FunctionExpr::precompose(const AffineMap& phi) const {
    const Eval f = eval_;
    double r = 0.0;
    if (compact_) {
        // supp(f o phi) = phi^{-1}(supp f) subset of B_{|A^{-1}|(R + |b|)}
        r = phi.inverse_norm_bound() * (radius_ + phi.offset().norm());
    }
    return FunctionExpr([f, phi](const Point& t) { return f(phi.apply(t)); }, compact_, r);
}

FunctionExpr FunctionExpr::precompose(const PiecewiseAffineMap& phi) const {
    const Eval f = eval_;
    double r = 0.0;
    if (compact_) {
        double off = 0.0;
        for (const auto& p : phi.pieces()) off = std::max(off, p.map.offset().norm());
        r = phi.inverse_norm_bound() * (radius_ + off);
    }
    return FunctionExpr([f, phi](const Point& t) { return f(phi.apply(t)); }, compact_, r);
}

FunctionExpr FunctionExpr::precompose(const NonlinearMap& phi) const {
    const Eval f = eval_;
    return FunctionExpr([f, phi](const Point& t) { return f(phi.apply(t)); }, false, 0.0);
}

SampledSignal sample(const FunctionExpr& f, const Grid& grid) {
    std::vector<cplx> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point t = grid.point(i);
        const cplx val = f(t);
        if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
            throw EvaluationError("sample: non-finite value at point (" +
                                  std::to_string(t.c[0]) + ", " +
                                  std::to_string(t.c[1]) + ")");
        v[i] = val;
    }
    return SampledSignal(grid, std::move(v));
}

} // namespace modspace
