#pragma once

#include "funk/convex_core.hpp"

#include <vector>

namespace funk {

// Minkowski functional of the translated domain (domain - p) at v: 1/t for
// the exit parameter t of the ray p + t v, and 0 when that ray never leaves.
double tangent_norm(const ConvexDomain& domain, const Point& p, const Direction& v,
                    const Tolerances& tol = default_tolerances());

struct DifferenceRow {
    double t;
    double quotient;  // F(p + t x, p + t y) / t
    double error;     // |quotient - tangent_norm(p, y - x)|
};

struct DifferenceReport {
    std::vector<DifferenceRow> rows;
    double limit;   // tangent_norm(p, y - x)
    double fitted_c;  // max over rows of error / t
    double slope;   // least-squares slope of log(error) against log(t)
};

DifferenceReport finite_difference_check(const ConvexDomain& domain, const Point& p,
                                         const Point& x, const Point& y,
                                         const std::vector<double>& t_list,
                                         const Tolerances& tol = default_tolerances());

}  // namespace funk
