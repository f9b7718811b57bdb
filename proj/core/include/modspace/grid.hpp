#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "modspace/errors.hpp"

namespace modspace {

using cplx = std::complex<double>;

/// A point of R^d, d in {1,2}. Unused coordinates are zero.
struct Point {
    int dim = 1;
    std::array<double, 2> c{0.0, 0.0};

    Point() = default;
    explicit Point(double x) : dim(1), c{x, 0.0} {}
    Point(double x, double y) : dim(2), c{x, y} {}

    double norm_sq() const { return c[0] * c[0] + c[1] * c[1]; }
    double norm() const { return std::sqrt(norm_sq()); }

    bool operator==(const Point& o) const = default;

    Point operator-(const Point& o) const {
        Point r = *this;
        r.c[0] -= o.c[0];
        r.c[1] -= o.c[1];
        return r;
    }
    Point operator+(const Point& o) const {
        Point r = *this;
        r.c[0] += o.c[0];
        r.c[1] += o.c[1];
        return r;
    }
};

/// Uniform centered grid on R^d: points origin + spacing*(k - n/2), k = 0..n-1
/// per axis. n is a power of two >= 4, the same on every axis.
class Grid {
public:
    Grid(int dim, int n_per_axis, double spacing, Point origin = Point{});

    int dim() const { return dim_; }
    int n_per_axis() const { return n_; }
    double spacing() const { return spacing_; }
    const Point& origin() const { return origin_; }

    std::size_t size() const;
    double extent() const { return n_ * spacing_; }

    /// Coordinate along one axis for per-axis index k.
    double axis_coord(int axis, int k) const {
        return origin_.c[axis] + spacing_ * (k - n_ / 2);
    }

    /// Grid point for a flat (row-major, axis 0 slowest) index.
    Point point(std::size_t flat) const;

    /// Cell measure spacing^dim.
    double cell() const;

    /// The reciprocal (frequency) grid: same n, spacing 1/(n*spacing), origin 0.
    Grid reciprocal() const;

    /// Same extent, half the spacing, twice the points per axis.
    Grid refined() const;

    bool operator==(const Grid& o) const = default;

private:
    int dim_;
    int n_;
    double spacing_;
    Point origin_;
};

/// Dense complex samples of a function on a Grid.
struct SampledSignal {
    Grid grid;
    std::vector<cplx> values;

    SampledSignal(Grid g, std::vector<cplx> v);
};

/// Riemann-sum L^2 norm: sqrt(sum |v|^2 * spacing^dim).
double l2_norm(const SampledSignal& s);

} // namespace modspace
