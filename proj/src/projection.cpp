#include "funk/projection.hpp"

#include "funk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace funk {
namespace {

constexpr double kPlateau = 1e-12;
constexpr double kInvPhi = 0.6180339887498949;

// Builds the constraint system of the closed forward ball of radius
// -log(mu) about x, stacked on top of the set.
void ball_and_set(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set,
                  double mu, Matrix& a, Vector& b) {
    const auto& cs = domain.constraints();
    const int n = domain.dim();
    const int rows = static_cast<int>(cs.size() + set.constraints.size());
    a.resize(rows, n);
    b.resize(rows);
    int r = 0;
    for (const auto& c : cs) {
        a.row(r) = c.normal.transpose();
        b(r++) = c.bound - mu * c.slack(x);
    }
    for (const auto& c : set.constraints) {
        a.row(r) = c.normal.transpose();
        b(r++) = c.bound;
    }
}

void check_set(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set) {
    if (set.constraints.empty()) fail(ErrorCode::InvalidArgument, "set needs constraints");
    if (set.dim() != domain.dim() || x.size() != domain.dim()) {
        fail(ErrorCode::DimensionMismatch, "projection operands differ in dimension");
    }
    if (!(domain.margin(x) > 0.0)) fail(ErrorCode::NotInterior, "x is not interior");
    // Containment: the largest value of each phi_j over the set is at most s_j.
    const int n = domain.dim();
    Matrix a(set.constraints.size(), n);
    Vector b(set.constraints.size());
    for (std::size_t i = 0; i < set.constraints.size(); ++i) {
        a.row(i) = set.constraints[i].normal.transpose();
        b(i) = set.constraints[i].bound;
    }
    if (lp::find_feasible(a, b).status != lp::Status::Optimal) {
        fail(ErrorCode::InvalidArgument, "set is empty");
    }
    for (const auto& c : domain.constraints()) {
        auto res = lp::minimize(a, b, -c.normal);
        if (res.status == lp::Status::Unbounded ||
            (res.status == lp::Status::Optimal &&
             -res.objective > c.bound + 1e-9 * std::max(1.0, std::abs(c.bound)))) {
            fail(ErrorCode::Containment, "set is not contained in the domain");
        }
    }
}

}  // namespace

double ClosedPolyhedron::margin(const Point& z) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : constraints) m = std::min(m, c.distance(z));
    return m;
}

ClosedPolyhedron closure(const HPolytope& polytope) {
    return {polytope.constraints(), polytope.vertices()};
}

Foot nearest_on_segment(const ConvexDomain& domain, const Point& x,
                        const std::pair<Point, Point>& segment, double start,
                        const Tolerances& tol) {
    const Point& p = segment.first;
    const Point& q = segment.second;
    if (!(contains(domain, p) > 0.0) || !(contains(domain, q) > 0.0)) {
        fail(ErrorCode::NotInterior, "segment endpoint is not interior");
    }
    if (!(contains(domain, x) > 0.0)) fail(ErrorCode::NotInterior, "x is not interior");
    auto at = [&](double t) -> Point { return p + t * (q - p); };
    auto f = [&](double t) { return funk(domain, x, at(t), tol).value(); };

    // Downhill walk from the start to a bracket [lo, hi] around a minimizer.
    double s = std::clamp(start, 0.0, 1.0);
    double fs = f(s);
    double step = 1.0 / 32.0;
    double lo = 0.0;
    double hi = 1.0;
    for (double dir : {1.0, -1.0}) {
        double next = std::clamp(s + dir * step, 0.0, 1.0);
        if (next == s || !(f(next) < fs)) continue;
        double prev = s;
        double cur = next;
        double fcur = f(cur);
        for (;;) {
            step *= 2.0;
            double ahead = std::clamp(cur + dir * step, 0.0, 1.0);
            // By quasi-convexity a minimizer lies between prev and the first
            // point that is no lower than cur.
            if (ahead == cur) break;
            double fa = f(ahead);
            if (!(fa < fcur)) {
                cur = ahead;
                break;
            }
            prev = cur;
            cur = ahead;
            fcur = fa;
        }
        lo = std::clamp(std::min(prev, cur), 0.0, 1.0);
        hi = std::clamp(std::max(prev, cur), 0.0, 1.0);
        break;
    }
    if (lo == 0.0 && hi == 1.0 && s > 0.0 && s < 1.0) {
        // Neither neighbour was lower: the start sits in the minimizing set.
        lo = std::max(0.0, s - step);
        hi = std::min(1.0, s + step);
    }

    // Golden-section refinement.
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > 1e-13) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = f(d);
        }
    }
    double best_t = 0.5 * (lo + hi);
    double best = f(best_t);
    for (double t : {0.0, 1.0}) {
        double v = f(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }

    // Ends of the plateau {f <= best + kPlateau}, an interval by quasi-convexity.
    const double level = best + kPlateau;
    auto plateau_end = [&](double outside) {
        if (f(outside) <= level) return outside;
        double in = best_t;
        double out = outside;
        for (int i = 0; i < 200 && std::abs(out - in) > 1e-15; ++i) {
            double mid = 0.5 * (in + out);
            (f(mid) <= level ? in : out) = mid;
        }
        return in;
    };
    double t = 0.5 * (plateau_end(0.0) + plateau_end(1.0));
    Point foot = at(t);
    return {foot, funk(domain, x, foot, tol), std::nullopt, t};
}

bool forward_ball_meets(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set,
                        double rho) {
    Matrix a;
    Vector b;
    ball_and_set(domain, x, set, std::exp(-rho), a, b);
    return lp::find_feasible(a, b).status == lp::Status::Optimal;
}

Foot nearest_on_convex(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set,
                       const Tolerances& tol) {
    check_set(domain, x, set);
    if (set.margin(x) >= 0.0) return {x, WeakDistance(0.0), std::nullopt, 0.0};

    Matrix a;
    Vector b;
    auto feasible_point = [&](double rho) -> std::optional<Point> {
        ball_and_set(domain, x, set, std::exp(-rho), a, b);
        auto res = lp::find_feasible(a, b);
        if (res.status != lp::Status::Optimal) return std::nullopt;
        return res.x;
    };

    Foot foot{x, WeakDistance(0.0), std::nullopt, 0.0};
    if (auto p = feasible_point(0.0)) {
        // Points at Funk distance 0 from x exist in unbounded domains.
        foot.point = *p;
        foot.distance = funk(domain, x, *p, tol);
        return foot;
    }
    double lo = 0.0;
    double hi = 1.0;
    std::optional<Point> best = feasible_point(hi);
    for (int i = 0; !best; ++i) {
        if (i > 60) fail(ErrorCode::Degenerate, "forward balls never meet the set");
        lo = hi;
        hi *= 2.0;
        best = feasible_point(hi);
    }
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        double mid = 0.5 * (lo + hi);
        if (auto p = feasible_point(mid)) {
            hi = mid;
            best = p;
        } else {
            lo = mid;
        }
    }
    foot.point = *best;
    foot.distance = funk(domain, x, foot.point, tol);
    Vector normal;
    if (foot_certificate(domain, x, foot.point, set, tol, &normal) && normal.size() > 0) {
        Hit hit = ray_boundary(domain, x, foot.point, tol);
        const Point& base = domain.base_point();
        double denom = normal.dot(hit.point() - base);
        foot.certificate = LinearForm{normal / denom, -normal.dot(base) / denom};
    }
    return foot;
}

Foot nearest_on_convex(const HPolytope& domain, const Point& x, const HPolytope& set,
                       const Tolerances& tol) {
    return nearest_on_convex(domain, x, closure(set), tol);
}

double convex_distance_lp(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set) {
    check_set(domain, x, set);
    const auto& cs = domain.constraints();
    const int n = domain.dim();
    const int rows = static_cast<int>(cs.size() + set.constraints.size()) + 1;
    Matrix a = Matrix::Zero(rows, n + 1);
    Vector b(rows);
    int r = 0;
    for (const auto& c : cs) {
        a.row(r).head(n) = c.normal.transpose();
        a(r, n) = c.slack(x);
        b(r++) = c.bound;
    }
    for (const auto& c : set.constraints) {
        a.row(r).head(n) = c.normal.transpose();
        b(r++) = c.bound;
    }
    a(r, n) = 1.0;  // mu <= 1
    b(r) = 1.0;
    Vector cost = Vector::Zero(n + 1);
    cost(n) = -1.0;
    auto res = lp::minimize(a, b, cost);
    if (res.status != lp::Status::Optimal || !(res.x(n) > 0.0)) {
        fail(ErrorCode::Degenerate, "forward balls never meet the set");
    }
    return -std::log(std::min(1.0, res.x(n)));
}

bool foot_certificate(const ConvexDomain& domain, const Point& x, const Point& y,
                      const ClosedPolyhedron& set, const Tolerances& tol,
                      Vector* separating_normal) {
    if (separating_normal) separating_normal->resize(0);
    if (set.margin(y) < -tol.boundary) fail(ErrorCode::InvalidArgument, "y is not in the set");
    auto detail = funk_detail(domain, x, y, tol);
    if (detail.value.value() == 0.0) return true;
    const Hit& hit = *detail.hit;

    std::vector<Vector> support;
    for (const auto& v : support_normals(domain, hit.point(), tol).normals) {
        support.push_back(v.normalized());
    }
    std::vector<Vector> set_normals;
    for (const auto& c : set.constraints) {
        if (std::abs(c.distance(y)) <= tol.face) set_normals.push_back(c.normal.normalized());
    }
    if (set_normals.empty() || support.empty()) return false;

    // Find w >= 0 with sum w = 1 and u >= 0 such that
    // sum w_i support_i + sum u_k set_k = 0.
    const int n = domain.dim();
    const int nw = static_cast<int>(support.size());
    const int nu = static_cast<int>(set_normals.size());
    const int vars = nw + nu;
    const double eq = 1e-9;
    Matrix a = Matrix::Zero(vars + 2 + 2 * n, vars);
    Vector b = Vector::Zero(a.rows());
    int r = 0;
    for (int i = 0; i < vars; ++i) a(r++, i) = -1.0;
    for (int i = 0; i < nw; ++i) {
        a(r, i) = 1.0;
        a(r + 1, i) = -1.0;
    }
    b(r++) = 1.0;
    b(r++) = -1.0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < nw; ++i) {
            a(r, i) = support[i](k);
            a(r + 1, i) = -support[i](k);
        }
        for (int i = 0; i < nu; ++i) {
            a(r, nw + i) = set_normals[i](k);
            a(r + 1, nw + i) = -set_normals[i](k);
        }
        b(r++) = eq;
        b(r++) = eq;
    }
    auto res = lp::find_feasible(a, b);
    if (res.status != lp::Status::Optimal) return false;
    if (separating_normal) {
        Vector g = Vector::Zero(n);
        for (int i = 0; i < nw; ++i) g += std::max(0.0, res.x(i)) * support[i];
        *separating_normal = g;
    }
    return true;
}

bool is_perpendicular(const ConvexDomain& domain, const Point& ray_from,
                      const Point& boundary_hit, const LinearForm& plane,
                      const Tolerances& tol) {
    if (plane.coeffs.size() != domain.dim()) {
        fail(ErrorCode::DimensionMismatch, "plane dimension");
    }
    const double cnorm = plane.coeffs.norm();
    if (!(cnorm > 0.0)) fail(ErrorCode::InvalidArgument, "plane has a zero normal");
    if (std::abs(plane(ray_from)) > tol.boundary * cnorm * std::max(1.0, ray_from.norm())) {
        fail(ErrorCode::InvalidArgument, "plane does not pass through the ray origin");
    }
    if (!(contains(domain, ray_from) > 0.0)) fail(ErrorCode::NotInterior, "ray origin");
    const Vector c = plane.coeffs / cnorm;
    std::vector<Vector> normals;
    for (const auto& normal : support_normals(domain, boundary_hit, tol).normals) {
        normals.push_back(normal.normalized());
    }
    // Support hyperplanes at a corner are spanned by the cone of active
    // normals, so test whether +-c lies in that cone.
    const int n = domain.dim();
    const int m = static_cast<int>(normals.size());
    for (double sign : {1.0, -1.0}) {
        Matrix a = Matrix::Zero(m + 2 * n, m);
        Vector b = Vector::Zero(m + 2 * n);
        for (int i = 0; i < m; ++i) a(i, i) = -1.0;
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < m; ++i) {
                a(m + 2 * k, i) = normals[i](k);
                a(m + 2 * k + 1, i) = -normals[i](k);
            }
            b(m + 2 * k) = sign * c(k) + tol.parallel;
            b(m + 2 * k + 1) = -sign * c(k) + tol.parallel;
        }
        if (lp::find_feasible(a, b).status == lp::Status::Optimal) return true;
    }
    return false;
}

}  // namespace funk
