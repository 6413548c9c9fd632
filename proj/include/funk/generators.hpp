#pragma once

#include "funk/convex_core.hpp"

#include <random>
#include <vector>

namespace funk::gen {

using Rng = std::mt19937_64;

// (-1, 1)^2 with constraints ordered x1 < 1, -x1 < 1, x2 < 1, -x2 < 1.
HPolytope square();
// (-1, 1)^n, same ordering per coordinate.
HPolytope cube(int n);
EuclideanBall unit_ball(int n);
// {x2 > 0} in the plane.
HPolytope half_plane();
// Positive orthant of R^n.
HPolytope orthant(int n);
// Regular k-gon with circumradius r centred at the origin, first vertex on e1.
HPolytope regular_polygon(int k, double r = 1.0);

// Polygon with k vertices at random angles on a randomly stretched circle.
HPolytope random_polygon(Rng& rng, int k);
// Simplex with Gaussian vertices, rejected until reasonably fat.
HPolytope random_simplex(Rng& rng, int n);
// Box constraints with bounds in [1, 2] plus `extra` random half-spaces at
// distance [0.5, 1.5] from the origin; bounded, origin interior, no vertices.
HPolytope random_polytope(Rng& rng, int n, int extra);
// Cycles through polygons, simplices and bounded random polytopes.
HPolytope random_bounded(Rng& rng, int n);

// Orthogonal * diag(sigma in [0.5, 2]) * orthogonal, plus a translation.
AffineMap random_affine(Rng& rng, int n);

Point uniform_in_ball(Rng& rng, int n, double radius);
Direction gaussian_direction(Rng& rng, int n);
double uniform(Rng& rng, double lo, double hi);

// Interior point drawn along a random ray from the base point, at most
// `fraction` of the way out.
Point interior_point(const ConvexDomain& domain, Rng& rng, double fraction = 0.9);

/// x -> (M (x, 1))_{0..n-1} / (M (x, 1))_n for an invertible (n+1)x(n+1) M.
class ProjectiveMap {
public:
    explicit ProjectiveMap(Matrix m);

    int dim() const { return static_cast<int>(m_.rows()) - 1; }
    const Matrix& matrix() const { return m_; }
    double denominator(const Point& x) const;
    Point apply(const Point& x) const;

private:
    Matrix m_;
};

// A map whose denominator stays above 1/2 on every vertex of the polytope,
// so that the image stays in the affine patch.
ProjectiveMap random_admissible_projective(Rng& rng, const HPolytope& polytope);

// Image of a polytope with vertices under an admissible projective map.
HPolytope transformed(const HPolytope& polytope, const ProjectiveMap& map);

}  // namespace funk::gen
