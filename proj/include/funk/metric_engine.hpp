#pragma once

#include "funk/convex_core.hpp"

#include <optional>

namespace funk {

/// Nonnegative, finite value of a weak metric. Zero is allowed for distinct
/// points and nothing forces symmetry.
class WeakDistance {
public:
    WeakDistance() = default;
    explicit WeakDistance(double value);

    double value() const { return value_; }
    operator double() const { return value_; }  // NOLINT(google-explicit-constructor)

private:
    double value_ = 0.0;
};

// Funk distance from the exit parameter t >= 1 of the ray x -> y.
double funk_from_parameter(double t);

// Value plus the boundary hit that produced it (absent for x == y).
struct FunkDetail {
    WeakDistance value;
    std::optional<Hit> hit;
};

FunkDetail funk_detail(const ConvexDomain& domain, const Point& x, const Point& y,
                       const Tolerances& tol = default_tolerances());

WeakDistance funk(const ConvexDomain& domain, const Point& x, const Point& y,
                  const Tolerances& tol = default_tolerances());
WeakDistance reverse_funk(const ConvexDomain& domain, const Point& x, const Point& y,
                          const Tolerances& tol = default_tolerances());
WeakDistance hilbert(const ConvexDomain& domain, const Point& x, const Point& y,
                     const Tolerances& tol = default_tolerances());
WeakDistance max_symmetrized(const ConvexDomain& domain, const Point& x, const Point& y,
                             const Tolerances& tol = default_tolerances());

/// Funk metric of omega measured relative to an englobing domain u. An empty
/// u stands for the whole affine patch, in which case the value reduces to
/// the Funk metric of omega.
///
/// Containment of omega in u cannot be decided for every representation, so
/// it is checked on a fixed pseudo-random sample of omega (plus the vertices
/// of omega when it is a polytope) at construction.
class RelativeFunk {
public:
    RelativeFunk(ConvexDomain omega, std::optional<ConvexDomain> u, int samples = 1000,
                 const Tolerances& tol = default_tolerances());

    WeakDistance operator()(const Point& x, const Point& y) const;

    const ConvexDomain& omega() const { return omega_; }
    const std::optional<ConvexDomain>& englobing() const { return u_; }

private:
    ConvexDomain omega_;
    std::optional<ConvexDomain> u_;
    Tolerances tol_;
};

WeakDistance relative_funk(const ConvexDomain& omega, const std::optional<ConvexDomain>& u,
                           const Point& x, const Point& y,
                           const Tolerances& tol = default_tolerances());

// max(0, max_j log((s_j - phi_j(x)) / (s_j - phi_j(y)))).
WeakDistance funk_polytope_closed_form(const HPolytope& polytope, const Point& x,
                                       const Point& y,
                                       const Tolerances& tol = default_tolerances());

// max over pairs (i, j) of half the log of the product of the two slack ratios.
WeakDistance hilbert_polytope_closed_form(const HPolytope& polytope, const Point& x,
                                          const Point& y,
                                          const Tolerances& tol = default_tolerances());

// Funk metric of the Euclidean unit ball centred at the origin.
WeakDistance funk_unit_ball_closed_form(const Point& x, const Point& y,
                                        const Tolerances& tol = default_tolerances());

// Open interval (b, a) of the real line.
struct Segment1D {
    double b;
    double a;
};

WeakDistance funk_1d(const Segment1D& seg, double x, double y);

// For z = x + t (y - x) on the ray through y: recover t from the distances
// F(x, y) > 0 and F(x, z), and back.
double ratio_from_distances(double fxy, double fxz);
WeakDistance distance_from_ratio(double fxy, double t);

// Componentwise log; an isometry from the positive orthant onto the weak
// Minkowski distance below.
Point orthant_log_map(const Point& x);
WeakDistance orthant_log_distance(const Point& u, const Point& v);

}  // namespace funk
