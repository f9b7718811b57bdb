#include "modspace/maps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace modspace {

AffineMap::AffineMap(int dim, const std::array<double, 4>& matrix, const Point& offset)
    : dim_(dim), a_(matrix), b_(offset) {
    if (dim != 1 && dim != 2)
        throw ParameterError("AffineMap: dim must be 1 or 2");
    b_.dim = dim;
    det_ = (dim == 1) ? a_[0] : a_[0] * a_[3] - a_[1] * a_[2];
    if (std::abs(det_) <= 1e-12)
        throw ParameterError("AffineMap: |det| = " + std::to_string(std::abs(det_)) +
                             " below invertibility threshold 1e-12");
}

AffineMap::AffineMap(double a, double b)
    : AffineMap(1, {a, 0.0, 0.0, 0.0}, Point(b)) {}

AffineMap AffineMap::identity(int dim) { return scaling(dim, 1.0); }

AffineMap AffineMap::scaling(int dim, double s) {
    if (dim == 1) return AffineMap(1, {s, 0, 0, 0}, Point(0.0));
    return AffineMap(2, {s, 0, 0, s}, Point(0.0, 0.0));
}

AffineMap AffineMap::translation(const Point& b) {
    if (b.dim == 1) return AffineMap(1, {1, 0, 0, 0}, b);
    return AffineMap(2, {1, 0, 0, 1}, b);
}

AffineMap AffineMap::rotation2d(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return AffineMap(2, {c, -s, s, c}, Point(0.0, 0.0));
}

Point AffineMap::apply_linear(const Point& x) const {
    if (dim_ == 1) return Point(a_[0] * x.c[0]);
    return Point(a_[0] * x.c[0] + a_[1] * x.c[1],
                 a_[2] * x.c[0] + a_[3] * x.c[1]);
}

Point AffineMap::apply(const Point& x) const {
    Point y = apply_linear(x);
    y.c[0] += b_.c[0];
    y.c[1] += b_.c[1];
    return y;
}

Point AffineMap::apply_transpose_inverse(const Point& x) const {
    if (dim_ == 1) return Point(x.c[0] / a_[0]);
    // (A^T)^{-1} = adj(A^T)/det
    return Point((a_[3] * x.c[0] - a_[2] * x.c[1]) / det_,
                 (-a_[1] * x.c[0] + a_[0] * x.c[1]) / det_);
}

AffineMap AffineMap::inverse() const {
    if (dim_ == 1) {
        const double ai = 1.0 / a_[0];
        return AffineMap(1, {ai, 0, 0, 0}, Point(-b_.c[0] * ai));
    }
    const std::array<double, 4> inv = {a_[3] / det_, -a_[1] / det_,
                                       -a_[2] / det_, a_[0] / det_};
    const Point mb(-(inv[0] * b_.c[0] + inv[1] * b_.c[1]),
                   -(inv[2] * b_.c[0] + inv[3] * b_.c[1]));
    return AffineMap(2, inv, mb);
}

AffineMap AffineMap::compose(const AffineMap& other) const {
    if (dim_ != other.dim_)
        throw ParameterError("AffineMap::compose: dimension mismatch");
    if (dim_ == 1)
        return AffineMap(1, {a_[0] * other.a_[0], 0, 0, 0},
                         Point(a_[0] * other.b_.c[0] + b_.c[0]));
    std::array<double, 4> m;
    m[0] = a_[0] * other.a_[0] + a_[1] * other.a_[2];
    m[1] = a_[0] * other.a_[1] + a_[1] * other.a_[3];
    m[2] = a_[2] * other.a_[0] + a_[3] * other.a_[2];
    m[3] = a_[2] * other.a_[1] + a_[3] * other.a_[3];
    Point off = apply(other.b_);
    return AffineMap(2, m, off);
}

double AffineMap::inverse_norm_bound() const {
    const AffineMap inv = inverse();
    double fro = 0.0;
    const int k = dim_ == 1 ? 1 : 4;
    for (int i = 0; i < k; ++i) fro += inv.a_[i] * inv.a_[i];
    return std::sqrt(fro);
}

namespace {

// Closed-box intersection; returns per-axis widths (negative = empty).
struct FaceInfo {
    bool touch = false;   // nonempty intersection
    bool overlap = false; // positive measure => interiors intersect
    int flat_axis = -1;   // the single axis of width zero, if a face
    std::array<double, 2> lo{0, 0}, hi{0, 0};
};

FaceInfo intersect(const Box& p, const Box& q) {
    FaceInfo f;
    int zero_axes = 0;
    for (int a = 0; a < p.dim; ++a) {
        f.lo[a] = std::max(p.lo[a], q.lo[a]);
        f.hi[a] = std::min(p.hi[a], q.hi[a]);
        if (f.lo[a] > f.hi[a]) return f; // disjoint closures
        if (f.lo[a] == f.hi[a]) {
            ++zero_axes;
            f.flat_axis = a;
        }
    }
    f.touch = true;
    f.overlap = (zero_axes == 0);
    return f;
}

double clamp_finite(double v, double fallback) {
    return std::isfinite(v) ? v : fallback;
}

} // namespace

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
    if (pieces_.empty())
        throw ParameterError("PiecewiseAffineMap: no pieces");
    dim_ = pieces_.front().cube.dim;
    for (const Piece& p : pieces_)
        if (p.cube.dim != dim_ || p.map.dim() != dim_)
            throw ParameterError("PiecewiseAffineMap: dimension mismatch in pieces");

    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
            const FaceInfo f = intersect(pieces_[i].cube, pieces_[j].cube);
            if (!f.touch) continue;
            if (f.overlap)
                throw ParameterError("PiecewiseAffineMap: pieces " + std::to_string(i) +
                                     " and " + std::to_string(j) +
                                     " have intersecting interiors");
            // Shared face: the two affine pieces must agree on it.
            std::mt19937_64 rng(1234u + 7919u * i + j);
            for (int s = 0; s < 100; ++s) {
                Point x;
                x.dim = dim_;
                for (int a = 0; a < dim_; ++a) {
                    if (a == f.flat_axis) {
                        x.c[a] = f.lo[a];
                    } else {
                        const double lo = clamp_finite(f.lo[a], -10.0);
                        const double hi = clamp_finite(f.hi[a], 10.0);
                        std::uniform_real_distribution<double> dist(lo, hi);
                        x.c[a] = dist(rng);
                    }
                }
                const Point yi = pieces_[i].map.apply(x);
                const Point yj = pieces_[j].map.apply(x);
                const double dev = (yi - yj).norm();
                if (dev > 1e-10)
                    throw ParameterError(
                        "PiecewiseAffineMap: pieces disagree on a shared face by " +
                        std::to_string(dev));
            }
        }
    }
}

PiecewiseAffineMap PiecewiseAffineMap::abs1d() {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Piece> ps;
    ps.push_back({Box::interval(-inf, 0.0), AffineMap(-1.0, 0.0)});
    ps.push_back({Box::interval(0.0, inf), AffineMap(1.0, 0.0)});
    return PiecewiseAffineMap(std::move(ps));
}

const PiecewiseAffineMap::Piece& PiecewiseAffineMap::piece_at(const Point& x) const {
    for (const Piece& p : pieces_)
        if (p.cube.contains(x)) return p;
    throw CoverageError("PiecewiseAffineMap: point (" + std::to_string(x.c[0]) + ", " +
                        std::to_string(x.c[1]) + ") lies in no piece");
}

Point PiecewiseAffineMap::apply(const Point& x) const {
    return piece_at(x).map.apply(x);
}

double PiecewiseAffineMap::inverse_norm_bound() const {
    double m = 0.0;
    for (const Piece& p : pieces_)
        m = std::max(m, p.map.inverse_norm_bound());
    return m;
}

NonlinearMap::NonlinearMap(int dim, MapFn map, JacFn jacobian, Smoothness smoothness,
                           Box check_box, std::uint64_t seed)
    : dim_(dim), map_(std::move(map)), jac_(std::move(jacobian)),
      smoothness_(smoothness) {
    if (dim != 1 && dim != 2)
        throw ParameterError("NonlinearMap: dim must be 1 or 2");
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 20; ++s) {
        Point x;
        x.dim = dim;
        for (int a = 0; a < dim; ++a) {
            std::uniform_real_distribution<double> dist(clamp_finite(check_box.lo[a], -1.0),
                                                        clamp_finite(check_box.hi[a], 1.0));
            x.c[a] = dist(rng);
        }
        const std::array<double, 4> J = jac_(x);
        const double h = 1e-5 * (1.0 + x.norm());
        for (int a = 0; a < dim; ++a) {
            Point xp = x, xm = x;
            xp.c[a] += h;
            xm.c[a] -= h;
            const Point fp = map_(xp), fm = map_(xm);
            for (int r = 0; r < dim; ++r) {
                const double fd = (fp.c[r] - fm.c[r]) / (2.0 * h);
                const double an = J[static_cast<std::size_t>(2 * r + a)];
                if (std::abs(fd - an) > 1e-6 * (1.0 + std::abs(an)))
                    throw ParameterError(
                        "NonlinearMap: Jacobian entry (" + std::to_string(r) + "," +
                        std::to_string(a) + ") disagrees with finite differences: " +
                        std::to_string(an) + " vs " + std::to_string(fd));
            }
        }
    }
}

NonlinearMap NonlinearMap::quadratic_perturbation(double lambda) {
    return NonlinearMap(
        1,
        [lambda](const Point& x) { return Point(x.c[0] + lambda * x.c[0] * x.c[0]); },
        [lambda](const Point& x) {
            return std::array<double, 4>{1.0 + 2.0 * lambda * x.c[0], 0, 0, 0};
        },
        Smoothness::C2, Box::interval(-1.0, 1.0));
}

} // namespace modspace
