#pragma once

#include "funk/convex_core.hpp"

#include <cstddef>
#include <vector>

namespace funk {

struct TriangleReport {
    double defect;  // F(x,y) + F(y,z) - F(x,z)
    // a(x,y), a(y,z), a(x,z); a hit is omitted when its two points coincide.
    std::vector<ProjectivePoint> hits;
    double singular_ratio;  // smallest / largest singular value of the stacked hits
    bool aligned;
};

// Alignment of the exit points in projective space is decided by the rank of
// the stacked unit homogeneous coordinates, which treats finite hits and hits
// at infinity alike.
TriangleReport triangle_report(const ConvexDomain& domain, const Point& x, const Point& y,
                               const Point& z, const Tolerances& tol = default_tolerances());

// Rank test after a projective change of chart that centres the finite
// points and scales their spread to 1; the ratio reported is the smallest
// over the largest singular value in that chart.
bool projectively_aligned(const std::vector<ProjectivePoint>& points, double rank_tol,
                          double* singular_ratio = nullptr);

// Cone at an interior point over a face of a polytope, the face being given
// by the indices of the constraints that are tight on it.
struct FaceCone {
    Point base;
    std::vector<std::size_t> face;
};

// Validates the indices and that the face is a nonempty proper face.
FaceCone make_face_cone(const HPolytope& polytope, const Point& base,
                        std::vector<std::size_t> face,
                        const Tolerances& tol = default_tolerances());

bool cone_member(const HPolytope& polytope, const FaceCone& cone, const Direction& v,
                 const Tolerances& tol = default_tolerances());

struct GeodesicCheck {
    bool is_geodesic;
    double defect;  // sum of consecutive distances minus the end-to-end distance
};

GeodesicCheck verify_geodesic(const ConvexDomain& domain, const std::vector<Point>& polyline,
                              const Tolerances& tol = default_tolerances());
GeodesicCheck verify_hilbert_geodesic(const ConvexDomain& domain,
                                      const std::vector<Point>& polyline,
                                      const Tolerances& tol = default_tolerances());

// Constraints tight at every exit point of the consecutive chords of the
// polyline, in the direction of travel (or against it when reversed is set).
// Chords whose ray never leaves contribute no restriction.
std::vector<std::size_t> common_face(const HPolytope& polytope,
                                     const std::vector<Point>& polyline, bool reversed = false,
                                     const Tolerances& tol = default_tolerances());

// True when the exit point of the ray x -> z is exposed, so that the
// straight segment is the only geodesic from x to z.
bool unique_geodesic_pair(const ConvexDomain& domain, const Point& x, const Point& z,
                          const Tolerances& tol = default_tolerances());

}  // namespace funk
