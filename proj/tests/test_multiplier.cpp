#include <doctest.h>

#include <cmath>
#include <numbers>

#include "modspace/defaults.hpp"
#include "modspace/multiplier.hpp"

using namespace modspace;

namespace {

constexpr double pi = std::numbers::pi;

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double mx = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        mx = std::max(mx, std::abs(a[i] - b[i]));
    return mx;
}

} // namespace

TEST_SUITE_BEGIN("multiplier");

TEST_CASE("constant symbol scales the signal") {
    const Grid g(1, 256, 1.0 / 8.0);
    const SampledSignal f = sample(FunctionExpr::gaussian(1.0), g);
    const SampledSignal h =
        apply_multiplier(MultiplierSymbol::constant(cplx(0.0, 2.0)), f);
    std::vector<cplx> expect = f.values;
    for (cplx& v : expect) v *= cplx(0.0, 2.0);
    CHECK(max_abs_diff(h.values, expect) < 1e-13);
    CHECK(h.grid == g);
}

TEST_CASE("e^{i xi} acts as translation by 1/(2 pi)") {
    const Grid g(1, 512, 1.0 / 16.0);
    const FunctionExpr f = FunctionExpr::gaussian(1.0);
    const SampledSignal h =
        apply_multiplier(MultiplierSymbol::chirp(AffineMap::identity(1)), f, g);
    const double shift = 1.0 / (2.0 * pi);
    double dev = 0.0;
    for (std::size_t i = 0; i < h.values.size(); ++i) {
        const double t = g.point(i).c[0];
        dev = std::max(dev, std::abs(h.values[i] - f(Point(t + shift))));
    }
    // the shifted gaussian is band-limited to rounding on this grid
    CHECK(dev < 1e-12);
}

TEST_CASE("cube indicator is an exact projection") {
    const Grid g(1, 256, 1.0 / 8.0);
    const MultiplierSymbol proj =
        MultiplierSymbol::cube_indicator(Box::interval(0.0, inf));
    const SampledSignal f =
        sample(FunctionExpr::gaussian(1.0) * FunctionExpr::plane_wave(1.0), g);
    const SampledSignal pf = apply_multiplier(proj, f);
    const SampledSignal ppf = apply_multiplier(proj, pf);
    CHECK(max_abs_diff(ppf.values, pf.values) < 1e-13);

    // complementary projections resolve the identity
    const MultiplierSymbol co =
        MultiplierSymbol::cube_indicator(Box::interval(-inf, 0.0));
    const SampledSignal qf = apply_multiplier(co, f);
    std::vector<cplx> total = pf.values;
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += qf.values[i];
    CHECK(max_abs_diff(total, f.values) < 1e-12);
}

TEST_CASE("half-line projection of a real even signal takes half the energy") {
    const Grid g(1, 512, 1.0 / 16.0);
    const SampledSignal f = sample(FunctionExpr::gaussian(1.0), g);
    const SampledSignal pf = apply_multiplier(
        MultiplierSymbol::cube_indicator(Box::interval(0.0, inf)), f);
    const double half = l2_norm(pf) / l2_norm(f);
    // the w = 0 sample sits on the cut, so the split is half only to O(dw)
    CHECK(half == doctest::Approx(std::sqrt(0.5)).epsilon(0.02));
}

TEST_CASE("linearity") {
    const Grid g(1, 256, 1.0 / 8.0);
    const MultiplierSymbol sigma = MultiplierSymbol::chirp(
        [](const Point& xi) { return 0.3 * xi.c[0] * xi.c[0]; });
    const SampledSignal f = sample(FunctionExpr::gaussian(1.0), g);
    const SampledSignal h = sample(FunctionExpr::bump(2.0), g);
    std::vector<cplx> combo(f.values.size());
    for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] = 2.0 * f.values[i] + cplx(0.0, 1.0) * h.values[i];
    const SampledSignal lhs = apply_multiplier(sigma, SampledSignal(g, combo));
    const SampledSignal hf = apply_multiplier(sigma, f);
    const SampledSignal hh = apply_multiplier(sigma, h);
    double dev = 0.0;
    for (std::size_t i = 0; i < combo.size(); ++i)
        dev = std::max(dev, std::abs(lhs.values[i] - 2.0 * hf.values[i] -
                                     cplx(0.0, 1.0) * hh.values[i]));
    CHECK(dev < 1e-12);
}

TEST_CASE("unimodular symbols preserve the L2 norm") {
    const Grid g(1, 512, 1.0 / 16.0);
    const SampledSignal f =
        sample(FunctionExpr::bump(1.0) * FunctionExpr::chirp(2.0), g);
    const SampledSignal h = apply_multiplier(
        MultiplierSymbol::chirp([](const Point& xi) { return std::sin(xi.c[0]); }),
        f);
    CHECK(std::abs(l2_norm(h) / l2_norm(f) - 1.0) < 1e-12);
}

TEST_CASE("non-finite symbol values are rejected") {
    const Grid g(1, 256, 1.0 / 8.0); // reciprocal grid contains xi = 0
    const MultiplierSymbol bad = MultiplierSymbol::custom(
        [](const Point& xi) { return cplx(1.0 / xi.c[0]); });
    const SampledSignal f = sample(FunctionExpr::gaussian(1.0), g);
    CHECK_THROWS_AS(apply_multiplier(bad, f), EvaluationError);
}

TEST_CASE("norm ratio over a family picks the maximum") {
    const Grid g(1, 1024, 1.0 / 32.0);
    const std::vector<FunctionExpr> family = {FunctionExpr::bump(1.0),
                                              FunctionExpr::bump(0.5)};
    const double r = multiplier_norm_ratio(MultiplierSymbol::constant(2.0), family,
                                           NormParams(2.0, 2.0), g);
    CHECK(r == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_SUITE_END();
