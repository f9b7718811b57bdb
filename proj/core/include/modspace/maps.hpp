#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "modspace/grid.hpp"

namespace modspace {

/// Half-open axis-aligned box [lo, hi) per axis; sides may be infinite.
struct Box {
    int dim = 1;
    std::array<double, 2> lo{-std::numeric_limits<double>::infinity(), 0.0};
    std::array<double, 2> hi{std::numeric_limits<double>::infinity(), 0.0};

    static Box interval(double a, double b) {
        Box q;
        q.dim = 1;
        q.lo = {a, 0.0};
        q.hi = {b, 0.0};
        return q;
    }
    static Box rect(double ax, double bx, double ay, double by) {
        Box q;
        q.dim = 2;
        q.lo = {ax, ay};
        q.hi = {bx, by};
        return q;
    }

    bool contains(const Point& p) const {
        for (int a = 0; a < dim; ++a)
            if (p.c[a] < lo[a] || p.c[a] >= hi[a]) return false;
        return true;
    }
};

/// Invertible affine map x -> Ax + b on R^d.
class AffineMap {
public:
    AffineMap(int dim, const std::array<double, 4>& matrix, const Point& offset);

    /// 1-d convenience: x -> a x + b.
    AffineMap(double a, double b);

    static AffineMap identity(int dim);
    static AffineMap scaling(int dim, double s);
    static AffineMap translation(const Point& b);
    static AffineMap rotation2d(double angle);

    int dim() const { return dim_; }
    double det() const { return det_; }
    const std::array<double, 4>& matrix() const { return a_; }
    const Point& offset() const { return b_; }

    Point apply(const Point& x) const;
    /// Linear part only, Ax.
    Point apply_linear(const Point& x) const;
    /// (A^T)^{-1} x — the frequency-side companion of the linear part.
    Point apply_transpose_inverse(const Point& x) const;

    AffineMap inverse() const;
    /// this after other: x -> this(other(x)).
    AffineMap compose(const AffineMap& other) const;

    /// Upper bound for the operator norm of A^{-1} (Frobenius).
    double inverse_norm_bound() const;

private:
    int dim_;
    std::array<double, 4> a_; // row-major; 1-d uses a_[0]
    Point b_;
    double det_;
};

/// Continuous map that is affine on each cube of a finite decomposition.
class PiecewiseAffineMap {
public:
    struct Piece {
        Box cube;
        AffineMap map;
    };

    /// Validates disjointness of interiors and continuity across shared faces
    /// (100 sampled points per face, tolerance 1e-10).
    explicit PiecewiseAffineMap(std::vector<Piece> pieces);

    /// The map x -> |x| on R.
    static PiecewiseAffineMap abs1d();

    int dim() const { return dim_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// Throws CoverageError if x lies in no piece.
    Point apply(const Point& x) const;
    const Piece& piece_at(const Point& x) const;

    double inverse_norm_bound() const;

private:
    int dim_;
    std::vector<Piece> pieces_;
};

/// Differentiable map R^d -> R^d with an evaluable Jacobian.
class NonlinearMap {
public:
    enum class Smoothness { C1, C2 };

    using MapFn = std::function<Point(const Point&)>;
    using JacFn = std::function<std::array<double, 4>(const Point&)>;

    /// Validates the Jacobian against central finite differences (step
    /// 1e-5*(1+|x|)) at random points of check_box, tolerance 1e-6.
    NonlinearMap(int dim, MapFn map, JacFn jacobian, Smoothness smoothness,
                 Box check_box, std::uint64_t seed = 7);

    /// x -> x + lambda x^2 on R.
    static NonlinearMap quadratic_perturbation(double lambda);

    int dim() const { return dim_; }
    Smoothness smoothness() const { return smoothness_; }
    Point apply(const Point& x) const { return map_(x); }
    std::array<double, 4> jacobian(const Point& x) const { return jac_(x); }

private:
    int dim_;
    MapFn map_;
    JacFn jac_;
    Smoothness smoothness_;
};

} // namespace modspace
