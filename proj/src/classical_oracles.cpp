#include "funk/classical_oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

namespace funk {
namespace {

void check_triangle(const Point& a, const Point& b, const Point& c, const Tolerances& tol) {
    if (a.size() != b.size() || a.size() != c.size()) {
        fail(ErrorCode::DimensionMismatch, "triangle vertices differ in dimension");
    }
    const Vector u = b - a;
    const Vector v = c - a;
    // Twice the area from the Gram determinant.
    double gram = u.squaredNorm() * v.squaredNorm() - u.dot(v) * u.dot(v);
    double area = 0.5 * std::sqrt(std::max(0.0, gram));
    double diam = std::max({u.norm(), v.norm(), (c - b).norm()});
    if (!(area > tol.area * diam * diam)) fail(ErrorCode::Degenerate, "degenerate triangle");
}

// (t - 1) / t for the division ratio t, i.e. the ratio PB / PA.
double side_factor(const Point& a, const Point& b, const Point& p, const Tolerances& tol) {
    double t = division_ratio(a, b, p, tol);
    if (std::abs(t) <= tol.line) fail(ErrorCode::Degenerate, "side point at a vertex");
    return (t - 1.0) / t;
}

double triple_product(const Point& a, const Point& b, const Point& c, const Point& a1,
                      const Point& b1, const Point& c1, const Tolerances& tol) {
    check_triangle(a, b, c, tol);
    // A' = l B + (1 - l) C, B' = m C + (1 - m) A, C' = n A + (1 - n) B.
    return side_factor(c, b, a1, tol) * side_factor(a, c, b1, tol) *
           side_factor(b, a, c1, tol);
}

// Intersection of the lines p + s u and q + r v in the plane.
std::optional<Point> meet(const Point& p, const Point& u, const Point& q, const Point& v) {
    double det = u(0) * v(1) - u(1) * v(0);
    double scale = u.norm() * v.norm();
    if (std::abs(det) <= 1e-14 * scale) return std::nullopt;
    Vector w = q - p;
    double s = (w(0) * v(1) - w(1) * v(0)) / det;
    return p + s * u;
}

Point exit_point(const ConvexDomain& domain, const Point& from, const Point& to,
                 const Tolerances& tol) {
    Hit hit = ray_boundary(domain, from, to, tol);
    if (!hit.is_finite()) fail(ErrorCode::Degenerate, "replay needs a bounded chord");
    return hit.point();
}

}  // namespace

double division_ratio(const Point& a, const Point& b, const Point& p, const Tolerances& tol) {
    if (a.size() != b.size() || a.size() != p.size()) {
        fail(ErrorCode::DimensionMismatch, "division ratio operands differ in dimension");
    }
    const Vector ab = b - a;
    const double len2 = ab.squaredNorm();
    if (!(std::sqrt(len2) > tol.point * std::max(1.0, a.norm()))) {
        fail(ErrorCode::Degenerate, "division ratio needs A != B");
    }
    const double t = (p - a).dot(ab) / len2;
    const double off = (p - a - t * ab).norm();
    if (off > tol.line * std::sqrt(len2)) fail(ErrorCode::InvalidArgument, "point is off the line");
    return t;
}

double menelaus_product(const Point& a, const Point& b, const Point& c, const Point& a1,
                        const Point& b1, const Point& c1, const Tolerances& tol) {
    return triple_product(a, b, c, a1, b1, c1, tol);
}

double ceva_product(const Point& a, const Point& b, const Point& c, const Point& a1,
                    const Point& b1, const Point& c1, const Tolerances& tol) {
    return triple_product(a, b, c, a1, b1, c1, tol);
}

double cross_ratio(const Point& b, const Point& x, const Point& y, const Point& a,
                   const Tolerances& tol) {
    const std::array<const Point*, 4> pts = {&b, &x, &y, &a};
    for (const auto* p : pts) {
        if (p->size() != b.size()) fail(ErrorCode::DimensionMismatch, "cross ratio dimensions");
    }
    // Parametrize along the longest pair for conditioning.
    const Point* from = &b;
    const Point* to = &a;
    double longest = 0.0;
    for (const auto* p : pts) {
        for (const auto* q : pts) {
            double d = (*q - *p).norm();
            if (d > longest) {
                longest = d;
                from = p;
                to = q;
            }
        }
    }
    if (!(longest > 0.0)) fail(ErrorCode::Degenerate, "cross ratio of coincident points");
    auto s = [&](const Point& p) { return division_ratio(*from, *to, p, tol); };
    const double sb = s(b), sx = s(x), sy = s(y), sa = s(a);
    if (std::abs(sx - sb) * longest <= tol.point || std::abs(sy - sa) * longest <= tol.point) {
        fail(ErrorCode::Degenerate, "cross ratio needs b != x and y != a");
    }
    return ((sy - sb) / (sx - sb)) * ((sx - sa) / (sy - sa));
}

ClassicalReplay classical_replay(const ConvexDomain& domain, const Point& x, const Point& y,
                                 const Point& z, const Tolerances& tol) {
    if (domain.dim() != 2) fail(ErrorCode::InvalidArgument, "replay is planar");
    check_triangle(x, y, z, tol);
    const Point a = exit_point(domain, x, y, tol);
    const Point c = exit_point(domain, y, z, tol);
    const Point e = exit_point(domain, x, z, tol);
    const Point b = exit_point(domain, y, x, tol);
    const Point d = exit_point(domain, z, y, tol);

    ClassicalReplay r{};
    r.chained = (x - a).norm() / (y - a).norm() * ((y - c).norm() / (z - c).norm());
    r.exit_ratio = (x - e).norm() / (z - e).norm();
    if (auto ap = meet(a, c - a, x, z - x)) {
        r.transversal = (x - *ap).norm() / (z - *ap).norm();
        r.a_prime_at_infinity = false;
        r.gap = (*ap - e).norm();
    } else {
        r.transversal = 1.0;
        r.a_prime_at_infinity = true;
        r.gap = std::numeric_limits<double>::infinity();
    }
    if (auto bp = meet(b, d - b, x, z - x)) {
        r.auxiliary = (*bp - z).norm() / (*bp - x).norm() * ((b - x).norm() / (b - y).norm()) *
                      ((d - y).norm() / (d - z).norm());
    } else {
        // b d parallel to x z: the b' factor tends to 1.
        r.auxiliary = (b - x).norm() / (b - y).norm() * ((d - y).norm() / (d - z).norm());
    }
    return r;
}

}  // namespace funk
