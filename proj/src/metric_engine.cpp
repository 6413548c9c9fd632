#include "funk/metric_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace funk {
namespace {

// Metric values within the clamp band of zero are reported as exactly 0.
WeakDistance clamped(double value, const Tolerances& tol) {
    if (std::abs(value) < tol.zero_clamp) return WeakDistance(0.0);
    return WeakDistance(value);
}

void require_interior(const ConvexDomain& domain, const Point& p, const char* what) {
    if (p.size() != domain.dim()) {
        fail(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong dimension");
    }
    if (!all_finite(p)) fail(ErrorCode::InvalidArgument, std::string(what) + " is not finite");
    if (!(contains(domain, p) > 0.0)) {
        fail(ErrorCode::NotInterior, std::string(what) + " is not an interior point");
    }
}

void require_interior(const HPolytope& polytope, const Point& p, const char* what) {
    if (p.size() != polytope.dim()) {
        fail(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong dimension");
    }
    if (!(polytope.margin(p) > 0.0)) {
        fail(ErrorCode::NotInterior, std::string(what) + " is not an interior point");
    }
}

}  // namespace

WeakDistance::WeakDistance(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0) {
        fail(ErrorCode::InvalidArgument, "weak distance must be finite and nonnegative");
    }
}

double funk_from_parameter(double t) {
    // log t - log(t - 1), written to keep precision for large t.
    return -std::log1p(-1.0 / t);
}

FunkDetail funk_detail(const ConvexDomain& domain, const Point& x, const Point& y,
                       const Tolerances& tol) {
    require_interior(domain, x, "x");
    require_interior(domain, y, "y");
    if ((y - x).norm() <= tol.point) return {WeakDistance(0.0), std::nullopt};
    Hit hit = ray_boundary(domain, x, y, tol);
    if (!hit.is_finite()) return {WeakDistance(0.0), hit};
    return {clamped(funk_from_parameter(hit.t()), tol), hit};
}

WeakDistance funk(const ConvexDomain& domain, const Point& x, const Point& y,
                  const Tolerances& tol) {
    return funk_detail(domain, x, y, tol).value;
}

WeakDistance reverse_funk(const ConvexDomain& domain, const Point& x, const Point& y,
                          const Tolerances& tol) {
    return funk(domain, y, x, tol);
}

WeakDistance hilbert(const ConvexDomain& domain, const Point& x, const Point& y,
                     const Tolerances& tol) {
    return clamped(0.5 * (funk(domain, x, y, tol) + funk(domain, y, x, tol)), tol);
}

WeakDistance max_symmetrized(const ConvexDomain& domain, const Point& x, const Point& y,
                             const Tolerances& tol) {
    return std::max(funk(domain, x, y, tol), funk(domain, y, x, tol),
                    [](const WeakDistance& l, const WeakDistance& r) {
                        return l.value() < r.value();
                    });
}

RelativeFunk::RelativeFunk(ConvexDomain omega, std::optional<ConvexDomain> u, int samples,
                           const Tolerances& tol)
    : omega_(std::move(omega)), u_(std::move(u)), tol_(tol) {
    if (!u_) return;
    if (u_->dim() != omega_.dim()) {
        fail(ErrorCode::DimensionMismatch, "relative Funk: domains differ in dimension");
    }
    auto check = [&](const Point& p) {
        if (contains(*u_, p) < -tol_.boundary) {
            fail(ErrorCode::Containment, "relative Funk: omega is not contained in u");
        }
    };
    check(omega_.base_point());
    if (const auto* poly = omega_.polytope()) {
        for (const auto& v : poly->vertices()) check(v);
    }
    std::mt19937_64 rng(0x5EEDF00DULL);
    for (const auto& p : sample_interior(omega_, samples, rng)) check(p);
}

WeakDistance RelativeFunk::operator()(const Point& x, const Point& y) const {
    require_interior(omega_, x, "x");
    require_interior(omega_, y, "y");
    if ((y - x).norm() <= tol_.point) return WeakDistance(0.0);

    double factor = 1.0;
    Hit a = ray_boundary(omega_, x, y, tol_);
    if (a.is_finite()) factor *= (x - a.point()).norm() / (y - a.point()).norm();
    if (u_) {
        if (!(contains(*u_, x) > 0.0) || !(contains(*u_, y) > 0.0)) {
            fail(ErrorCode::Containment, "relative Funk: point of omega outside u");
        }
        Hit w = ray_boundary(*u_, y, x, tol_);
        if (w.is_finite()) factor *= (y - w.point()).norm() / (x - w.point()).norm();
    }
    if (!(factor > 0.0)) fail(ErrorCode::Containment, "relative Funk: nonpositive ratio");
    return clamped(std::log(factor), tol_);
}

WeakDistance relative_funk(const ConvexDomain& omega, const std::optional<ConvexDomain>& u,
                           const Point& x, const Point& y, const Tolerances& tol) {
    return RelativeFunk(omega, u, 1000, tol)(x, y);
}

WeakDistance funk_polytope_closed_form(const HPolytope& polytope, const Point& x,
                                       const Point& y, const Tolerances& tol) {
    require_interior(polytope, x, "x");
    require_interior(polytope, y, "y");
    double best = 0.0;
    for (const auto& c : polytope.constraints()) {
        best = std::max(best, std::log(c.slack(x) / c.slack(y)));
    }
    return clamped(best, tol);
}

WeakDistance hilbert_polytope_closed_form(const HPolytope& polytope, const Point& x,
                                          const Point& y, const Tolerances& tol) {
    require_interior(polytope, x, "x");
    require_interior(polytope, y, "y");
    const auto& cs = polytope.constraints();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& ci : cs) {
        for (const auto& cj : cs) {
            double v = 0.5 * std::log((ci.slack(y) / ci.slack(x)) * (cj.slack(x) / cj.slack(y)));
            best = std::max(best, v);
        }
    }
    return clamped(std::max(best, 0.0), tol);
}

WeakDistance funk_unit_ball_closed_form(const Point& x, const Point& y, const Tolerances& tol) {
    if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "points differ in dimension");
    const double xx = x.squaredNorm();
    const double yy = y.squaredNorm();
    if (!(xx < 1.0) || !(yy < 1.0)) {
        fail(ErrorCode::NotInterior, "point outside the unit ball");
    }
    const Vector d = y - x;
    if (d.norm() <= tol.point) return WeakDistance(0.0);
    const double xy = x.dot(y);
    // |x ^ y| = |x ^ (y - x)|; the second form keeps precision when y ~ x.
    const double xd = x.dot(d);
    const double dd = d.squaredNorm();
    const double wedge2 = std::max(0.0, xx * dd - xd * xd);
    const double radicand = dd - wedge2;
    if (radicand < -tol.boundary * dd) {
        fail(ErrorCode::Degenerate, "unit ball closed form: negative radicand");
    }
    const double root = std::sqrt(std::max(0.0, radicand));
    const double num = root + xx - xy;
    const double den = root - yy + xy;
    if (!(den > 0.0) || !(num > 0.0)) {
        fail(ErrorCode::Degenerate, "unit ball closed form: ill-conditioned quotient");
    }
    return clamped(std::max(0.0, std::log(num / den)), tol);
}

WeakDistance funk_1d(const Segment1D& seg, double x, double y) {
    if (!(seg.b < seg.a)) fail(ErrorCode::InvalidArgument, "segment needs b < a");
    for (double p : {x, y}) {
        if (!(p > seg.b && p < seg.a)) {
            fail(ErrorCode::NotInterior, "point outside the open segment");
        }
    }
    if (y > x) return WeakDistance(std::log((seg.a - x) / (seg.a - y)));
    if (y < x) return WeakDistance(std::log((x - seg.b) / (y - seg.b)));
    return WeakDistance(0.0);
}

double ratio_from_distances(double fxy, double fxz) {
    if (!(fxy > 0.0) || !std::isfinite(fxy)) {
        fail(ErrorCode::InvalidArgument, "ratio needs F(x, y) > 0");
    }
    if (!(fxz >= 0.0) || !std::isfinite(fxz)) {
        fail(ErrorCode::InvalidArgument, "ratio needs a finite F(x, z) >= 0");
    }
    // e^Fxy (e^Fxz - 1) / (e^Fxz (e^Fxy - 1))
    return std::expm1(fxz) / std::expm1(fxy) * std::exp(fxy - fxz);
}

WeakDistance distance_from_ratio(double fxy, double t) {
    if (!(fxy > 0.0) || !std::isfinite(fxy)) {
        fail(ErrorCode::InvalidArgument, "ratio needs F(x, y) > 0");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        fail(ErrorCode::InvalidArgument, "z must lie on the ray from x through y");
    }
    // e^Fxy + t (1 - e^Fxy)
    const double arg = std::exp(fxy) - t * std::expm1(fxy);
    if (!(arg > 0.0)) fail(ErrorCode::NotInterior, "z lies at or beyond the boundary");
    const double value = fxy - std::log(arg);
    return WeakDistance(std::abs(value) < default_tolerances().zero_clamp ? 0.0 : value);
}

Point orthant_log_map(const Point& x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!(x(i) > 0.0) || !std::isfinite(x(i))) {
            fail(ErrorCode::NotInterior, "orthant point needs positive coordinates");
        }
    }
    return x.array().log().matrix();
}

WeakDistance orthant_log_distance(const Point& u, const Point& v) {
    if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "points differ in dimension");
    double best = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) best = std::max(best, u(i) - v(i));
    return WeakDistance(best);
}

}  // namespace funk
