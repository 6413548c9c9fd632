#include "funk/finsler_tangent.hpp"

#include "funk/metric_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace funk {

double tangent_norm(const ConvexDomain& domain, const Point& p, const Direction& v,
                    const Tolerances& tol) {
    if (p.size() != domain.dim() || v.size() != domain.dim()) {
        fail(ErrorCode::DimensionMismatch, "tangent vector dimension");
    }
    if (!(contains(domain, p) > 0.0)) fail(ErrorCode::NotInterior, "base point is not interior");
    if (v.norm() <= tol.point) return 0.0;
    Hit hit = ray_boundary(domain, p, p + v, tol);
    return hit.is_finite() ? 1.0 / hit.t() : 0.0;
}

DifferenceReport finite_difference_check(const ConvexDomain& domain, const Point& p,
                                         const Point& x, const Point& y,
                                         const std::vector<double>& t_list,
                                         const Tolerances& tol) {
    if (t_list.empty()) fail(ErrorCode::InvalidArgument, "need at least one step");
    DifferenceReport report;
    report.limit = tangent_norm(domain, p, y - x, tol);
    report.fitted_c = 0.0;
    for (double t : t_list) {
        if (!(t > 0.0)) fail(ErrorCode::InvalidArgument, "steps must be positive");
        Point px = p + t * x;
        Point py = p + t * y;
        if (!(contains(domain, px) > 0.0) || !(contains(domain, py) > 0.0)) {
            fail(ErrorCode::NotInterior, "finite difference sample escapes the domain");
        }
        double q = funk(domain, px, py, tol) / t;
        double err = std::abs(q - report.limit);
        report.rows.push_back({t, q, err});
        report.fitted_c = std::max(report.fitted_c, err / t);
    }
    // Regression over rows with a measurable error.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& r : report.rows) {
        if (!(r.error > 0.0)) continue;
        double lx = std::log(r.t);
        double ly = std::log(r.error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    double denom = m * sxx - sx * sx;
    report.slope = (m >= 2 && denom > 0.0) ? (m * sxy - sx * sy) / denom
                                           : std::numeric_limits<double>::quiet_NaN();
    return report;
}

}  // namespace funk
