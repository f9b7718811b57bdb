#pragma once

#include <utility>

#include "modspace/function_expr.hpp"
#include "modspace/grid.hpp"

namespace modspace {

/// Samples of f-hat on the reciprocal grid, under the convention
/// f^(w) = int f(t) e^{-2 pi i t.w} dt.
struct Spectrum {
    Grid grid; // frequency grid: spacing 1/(n * time_spacing), origin 0
    std::vector<cplx> values;

    Spectrum(Grid g, std::vector<cplx> v);
};

/// Riemann-sum continuous Fourier transform: DFT * spacing^dim with phase
/// bookkeeping so that frequency 0 sits at the grid center.
Spectrum forward_ft(const SampledSignal& s);

/// Exact algebraic inverse of forward_ft; round trip is identity up to
/// rounding. The returned signal lives on the reciprocal of sp.grid with the
/// given time origin (default 0).
SampledSignal inverse_ft(const Spectrum& sp, Point time_origin = Point{});

/// (l2_norm(s), l2_norm(forward_ft(s))) — Plancherel harness.
std::pair<double, double> parseval_check(const SampledSignal& s);

} // namespace modspace
