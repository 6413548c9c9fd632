#pragma once

#include "funk/convex_core.hpp"
#include "funk/metric_engine.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace funk {

// Closed polyhedron {z : <normal_j, z> <= bound_j}, possibly flat or
// unbounded. Used for the sets projected onto.
struct ClosedPolyhedron {
    std::vector<Constraint> constraints;
    std::vector<Point> vertices;  // optional

    int dim() const { return static_cast<int>(constraints.front().normal.size()); }
    double margin(const Point& z) const;
};

ClosedPolyhedron closure(const HPolytope& polytope);

struct Foot {
    Point point;
    WeakDistance distance;
    std::optional<LinearForm> certificate;  // supporting functional at the exit point
    double parameter = 0.0;                 // segment parameter, for segment feet
};

/// Minimizes t -> F(x, p + t (q - p)) over [0, 1]. The function is
/// quasi-convex (its sublevel sets are forward balls cut by the segment), so
/// a downhill walk from `start` followed by golden-section search finds a
/// minimizer. Flat minima are resolved to the midpoint of the set where the
/// value is within 1e-12 of the minimum, which also makes the answer
/// independent of `start`.
Foot nearest_on_segment(const ConvexDomain& domain, const Point& x,
                        const std::pair<Point, Point>& segment, double start = 0.5,
                        const Tolerances& tol = default_tolerances());

// Whether the closed forward ball of radius rho about x meets the set.
bool forward_ball_meets(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set,
                        double rho);

/// Nearest point of a closed convex polyhedron inside a polytope, found by
/// bisection on the radius of the forward ball (a polytope, so that meeting
/// the set is a linear feasibility problem).
Foot nearest_on_convex(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set,
                       const Tolerances& tol = default_tolerances());
Foot nearest_on_convex(const HPolytope& domain, const Point& x, const HPolytope& set,
                       const Tolerances& tol = default_tolerances());

// Same distance from a single LP: maximize mu = e^-rho subject to
// phi_j(y) + mu (s_j - phi_j(x)) <= s_j and y in the set.
double convex_distance_lp(const HPolytope& domain, const Point& x, const ClosedPolyhedron& set);

/// Optimality test for y in the set: F(x, y) = 0, or some hyperplane through
/// y parallel to a support hyperplane at a(x, y) separates x from the set.
/// The search runs over the cone of supporting normals at a(x, y) against
/// the normal cone of the set at y, which is exact for polyhedral sets.
bool foot_certificate(const ConvexDomain& domain, const Point& x, const Point& y,
                      const ClosedPolyhedron& set, const Tolerances& tol = default_tolerances(),
                      Vector* separating_normal = nullptr);

// Whether the ray from `ray_from` to the boundary point `boundary_hit` is
// perpendicular to the hyperplane {plane = 0} through `ray_from`.
bool is_perpendicular(const ConvexDomain& domain, const Point& ray_from,
                      const Point& boundary_hit, const LinearForm& plane,
                      const Tolerances& tol = default_tolerances());

}  // namespace funk
