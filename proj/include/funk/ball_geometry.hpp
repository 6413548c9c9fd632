#pragma once

#include "funk/convex_core.hpp"

#include <cstdint>
#include <vector>

namespace funk {

enum class Orientation { Forward, Backward };

/// Metric ball of the Funk metric, realized as a convex domain: the forward
/// ball B+(x, rho) = {y : F(x, y) < rho} is the homothet of the domain about
/// x with factor 1 - e^-rho; the backward ball B-(x, rho) = {y : F(y, x) < rho}
/// is the domain intersected with its image under the homothety about x of
/// factor -(e^rho - 1).
struct MetricBall {
    ConvexDomain domain;
    Point center;
    double radius;
    Orientation orientation;
    ConvexDomain realized;
};

struct SandwichConstants {
    double lambda_x;  // Euclidean distance from x to the boundary
    double Lambda_x;  // largest Euclidean distance from x to a boundary point
};

MetricBall forward_ball(const ConvexDomain& domain, const Point& x, double rho);
MetricBall backward_ball(const ConvexDomain& domain, const Point& x, double rho);

bool in_ball(const MetricBall& ball, const Point& y);

// k unit directions: equally spaced angles starting at e1 in the plane,
// a shifted Halton sequence pushed through the Gaussian quantile otherwise.
std::vector<Direction> sphere_directions(int dim, int k, std::uint64_t seed = 0);

struct SpherePoint {
    Point point;
    // False for backward-ball samples lying on the boundary of the domain
    // itself, where the reverse distance to the center is below the radius.
    bool on_sphere;
};

// Boundary points of the realized ball along the given directions from its
// center. Directions in which the ball is unbounded produce no sample.
std::vector<SpherePoint> sphere_sample(const MetricBall& ball, int k, std::uint64_t seed = 0);

SandwichConstants sandwich(const HPolytope& polytope, const Point& x);

// Dilation or translation taking one forward ball of a domain onto another.
AffineMap ball_similarity(const MetricBall& from, const MetricBall& to);

}  // namespace funk
