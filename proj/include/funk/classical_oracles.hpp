#pragma once

#include "funk/convex_core.hpp"

namespace funk {

// t with P = t B + (1 - t) A; negative exactly when A lies between B and P.
double division_ratio(const Point& a, const Point& b, const Point& p,
                      const Tolerances& tol = default_tolerances());

// (A'B / A'C) (B'C / B'A) (C'A / C'B) for points A', B', C' on the side lines
// BC, AC, AB. Equals +1 iff A', B', C' are aligned.
double menelaus_product(const Point& a, const Point& b, const Point& c, const Point& a1,
                        const Point& b1, const Point& c1,
                        const Tolerances& tol = default_tolerances());

// Same triple product; equals -1 iff the cevians AA', BB', CC' are
// concurrent or parallel.
double ceva_product(const Point& a, const Point& b, const Point& c, const Point& a1,
                    const Point& b1, const Point& c1,
                    const Tolerances& tol = default_tolerances());

// (|y - b| / |x - b|) (|x - a| / |y - a|) for four collinear points, from
// signed parameters along the common line.
double cross_ratio(const Point& b, const Point& x, const Point& y, const Point& a,
                   const Tolerances& tol = default_tolerances());

/// Replay of the classical Menelaus proof of the triangle inequality in a
/// planar domain. With a = a(x, y), c = a(y, z) and a' the point where the
/// line ac meets the line xz,
///
///     |x - a| / |y - a| * |y - c| / |z - c| = |x - a'| / |z - a'|
///                                          >= |x - e| / |z - e|,
///
/// where e = a(x, z); the logs of the two ends are F(x,y) + F(y,z) and F(x,z).
/// The auxiliary Menelaus transversal through b = a(y, x), d = a(z, y) and
/// b' on xz is also evaluated.
struct ClassicalReplay {
    double chained;    // |x - a| / |y - a| * |y - c| / |z - c|
    double transversal;  // |x - a'| / |z - a'|
    double exit_ratio;   // |x - e| / |z - e|
    double auxiliary;    // Menelaus product of b, b', d on triangle x y z
    bool a_prime_at_infinity;
    double gap;  // |a' - e|, zero in the aligned case
};

ClassicalReplay classical_replay(const ConvexDomain& domain, const Point& x, const Point& y,
                                 const Point& z, const Tolerances& tol = default_tolerances());

}  // namespace funk
