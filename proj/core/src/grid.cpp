#include "modspace/grid.hpp"

#include <cmath>
#include <string>

namespace modspace {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
} // namespace

Grid::Grid(int dim, int n_per_axis, double spacing, Point origin)
    : dim_(dim), n_(n_per_axis), spacing_(spacing), origin_(origin) {
    if (dim != 1 && dim != 2)
        throw ParameterError("Grid: dim must be 1 or 2, got " + std::to_string(dim));
    if (n_per_axis < 4 || !is_pow2(n_per_axis))
        throw ParameterError("Grid: n_per_axis must be a power of two >= 4, got " +
                             std::to_string(n_per_axis));
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw ParameterError("Grid: spacing must be positive and finite");
    origin_.dim = dim;
}

std::size_t Grid::size() const {
    std::size_t s = static_cast<std::size_t>(n_);
    return dim_ == 1 ? s : s * s;
}

Point Grid::point(std::size_t flat) const {
    if (dim_ == 1) {
        Point p(axis_coord(0, static_cast<int>(flat)));
        return p;
    }
    const int i = static_cast<int>(flat / n_);
    const int j = static_cast<int>(flat % n_);
    return Point(axis_coord(0, i), axis_coord(1, j));
}

double Grid::cell() const {
    return dim_ == 1 ? spacing_ : spacing_ * spacing_;
}

Grid Grid::reciprocal() const {
    return Grid(dim_, n_, 1.0 / (n_ * spacing_));
}

Grid Grid::refined() const {
    return Grid(dim_, 2 * n_, 0.5 * spacing_, origin_);
}

SampledSignal::SampledSignal(Grid g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw ParameterError("SampledSignal: values length " +
                             std::to_string(values.size()) +
                             " does not match grid cardinality " +
                             std::to_string(grid.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
            throw EvaluationError("SampledSignal: non-finite value at flat index " +
                                  std::to_string(i));
    }
}

double l2_norm(const SampledSignal& s) {
    double acc = 0.0;
    for (const cplx& v : s.values) acc += std::norm(v);
    return std::sqrt(acc * s.grid.cell());
}

} // namespace modspace
