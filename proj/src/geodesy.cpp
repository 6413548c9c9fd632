#include "funk/geodesy.hpp"

#include "funk/lp.hpp"
#include "funk/metric_engine.hpp"

#include <algorithm>
#include <cmath>

namespace funk {
namespace {

template <class Metric>
GeodesicCheck additivity(const ConvexDomain& domain, const std::vector<Point>& polyline,
                         const Tolerances& tol, Metric metric) {
    if (polyline.size() < 2) fail(ErrorCode::InvalidArgument, "polyline needs two points");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        sum += metric(domain, polyline[i], polyline[i + 1], tol);
    }
    double defect = sum - metric(domain, polyline.front(), polyline.back(), tol);
    return {defect <= tol.geodesic, defect};
}

}  // namespace

bool projectively_aligned(const std::vector<ProjectivePoint>& points, double rank_tol,
                          double* singular_ratio) {
    if (points.size() < 3) {
        if (singular_ratio) *singular_ratio = 0.0;
        return true;
    }
    const auto cols = points.front().homogeneous.size();
    const auto n = cols - 1;
    Matrix m(points.size(), cols);
    for (std::size_t i = 0; i < points.size(); ++i) m.row(i) = points[i].homogeneous.transpose();
    // Alignment is projectively invariant, so condition the chart first:
    // centre the finite points and scale their spread to 1. Without this,
    // nearly coincident hits look aligned whatever their configuration.
    Vector centre = Vector::Zero(n);
    int finite = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m(i, n) > 0.0) {
            centre += m.row(i).head(n).transpose() / m(i, n);
            ++finite;
        }
    }
    if (finite > 0) {
        centre /= finite;
        double spread = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, n) > 0.0) {
                spread = std::max(spread, (m.row(i).head(n).transpose() / m(i, n) - centre).norm());
            }
        }
        if (!(spread > 0.0)) spread = 1.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            m.row(i).head(n) = (m.row(i).head(n) - m(i, n) * centre.transpose()) / spread;
            m.row(i).normalize();
        }
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() < 3) {
        if (singular_ratio) *singular_ratio = 0.0;
        return true;
    }
    double ratio = sv(2) / sv(0);
    if (singular_ratio) *singular_ratio = ratio;
    return ratio <= rank_tol;
}

TriangleReport triangle_report(const ConvexDomain& domain, const Point& x, const Point& y,
                               const Point& z, const Tolerances& tol) {
    auto xy = funk_detail(domain, x, y, tol);
    auto yz = funk_detail(domain, y, z, tol);
    auto xz = funk_detail(domain, x, z, tol);
    TriangleReport report;
    report.defect = xy.value + yz.value - xz.value;
    for (const auto* d : {&xy, &yz, &xz}) {
        if (d->hit) report.hits.push_back(to_projective(*d->hit));
    }
    report.aligned = projectively_aligned(report.hits, tol.rank, &report.singular_ratio);
    return report;
}

FaceCone make_face_cone(const HPolytope& polytope, const Point& base,
                        std::vector<std::size_t> face, const Tolerances& tol) {
    const auto& cs = polytope.constraints();
    if (face.empty()) fail(ErrorCode::InvalidArgument, "face needs at least one constraint");
    for (auto j : face) {
        if (j >= cs.size()) fail(ErrorCode::InvalidArgument, "face index out of range");
    }
    if (base.size() != polytope.dim()) fail(ErrorCode::DimensionMismatch, "cone base dimension");
    if (!(polytope.margin(base) > 0.0)) fail(ErrorCode::NotInterior, "cone base is not interior");

    // The face {phi_j = s_j for j in face} of the closure must be nonempty.
    const int n = polytope.dim();
    const int m = static_cast<int>(cs.size());
    Matrix a(m + static_cast<int>(face.size()), n);
    Vector b(a.rows());
    for (int j = 0; j < m; ++j) {
        a.row(j) = cs[j].normal.transpose();
        b(j) = cs[j].bound;
    }
    for (std::size_t k = 0; k < face.size(); ++k) {
        const auto& c = cs[face[k]];
        a.row(m + k) = -c.normal.transpose();
        b(m + k) = -c.bound + tol.face * c.normal.norm();
    }
    if (lp::find_feasible(a, b).status != lp::Status::Optimal) {
        fail(ErrorCode::InvalidArgument, "constraints do not meet in a face");
    }
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return {base, std::move(face)};
}

bool cone_member(const HPolytope& polytope, const FaceCone& cone, const Direction& v,
                 const Tolerances& tol) {
    if (v.size() != polytope.dim()) fail(ErrorCode::DimensionMismatch, "direction dimension");
    if (v.norm() <= tol.point) return true;
    Hit hit = ray_boundary(polytope, cone.base, cone.base + v, tol);
    const auto& cs = polytope.constraints();
    if (hit.is_finite()) {
        auto active = active_face(polytope, hit.point(), tol);
        return std::includes(active.begin(), active.end(), cone.face.begin(), cone.face.end());
    }
    // Point at infinity: v must lie in the recession cone of the face.
    for (auto j : cone.face) {
        if (std::abs(cs[j].normal.dot(v)) > tol.face * cs[j].normal.norm() * v.norm()) return false;
    }
    return true;
}

GeodesicCheck verify_geodesic(const ConvexDomain& domain, const std::vector<Point>& polyline,
                              const Tolerances& tol) {
    return additivity(domain, polyline, tol,
                      [](const ConvexDomain& d, const Point& p, const Point& q,
                         const Tolerances& t) { return funk(d, p, q, t).value(); });
}

GeodesicCheck verify_hilbert_geodesic(const ConvexDomain& domain,
                                      const std::vector<Point>& polyline,
                                      const Tolerances& tol) {
    return additivity(domain, polyline, tol,
                      [](const ConvexDomain& d, const Point& p, const Point& q,
                         const Tolerances& t) { return hilbert(d, p, q, t).value(); });
}

std::vector<std::size_t> common_face(const HPolytope& polytope,
                                     const std::vector<Point>& polyline, bool reversed,
                                     const Tolerances& tol) {
    if (polyline.size() < 2) fail(ErrorCode::InvalidArgument, "polyline needs two points");
    std::vector<std::size_t> face(polytope.constraints().size());
    for (std::size_t j = 0; j < face.size(); ++j) face[j] = j;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        const Point& from = reversed ? polyline[i + 1] : polyline[i];
        const Point& to = reversed ? polyline[i] : polyline[i + 1];
        if ((to - from).norm() <= tol.point) continue;
        Hit hit = ray_boundary(polytope, from, to, tol);
        if (!hit.is_finite()) continue;
        auto active = active_face(polytope, hit.point(), tol);
        std::vector<std::size_t> kept;
        std::set_intersection(face.begin(), face.end(), active.begin(), active.end(),
                              std::back_inserter(kept));
        face = std::move(kept);
    }
    return face;
}

bool unique_geodesic_pair(const ConvexDomain& domain, const Point& x, const Point& z,
                          const Tolerances& tol) {
    Hit hit = ray_boundary(domain, x, z, tol);
    if (!hit.is_finite()) {
        fail(ErrorCode::Degenerate, "exit point at infinity; exposedness is undefined");
    }
    SupportData support = support_normals(domain, hit.point(), tol);
    if (support.strictly_convex) return true;
    if (support.normals.empty()) return false;
    Matrix normals(support.normals.size(), domain.dim());
    for (std::size_t i = 0; i < support.normals.size(); ++i) {
        normals.row(i) = support.normals[i].normalized().transpose();
    }
    Eigen::JacobiSVD<Matrix> svd(normals);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol.rank * sv(0)) ++rank;
    }
    return rank == domain.dim();
}

}  // namespace funk
