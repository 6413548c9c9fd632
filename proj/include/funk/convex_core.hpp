#pragma once

#include "funk/common.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <vector>

namespace funk {

// Affine functional x -> <coeffs, x> + offset.
struct LinearForm {
    Vector coeffs;
    double offset = 0.0;

    double operator()(const Point& x) const { return coeffs.dot(x) + offset; }
};

// Open half-space { x : <normal, x> < bound }.
struct Constraint {
    Vector normal;
    double bound = 0.0;

    double value(const Point& x) const { return normal.dot(x); }
    double slack(const Point& x) const { return bound - normal.dot(x); }
    // Signed Euclidean distance from x to the bounding hyperplane, positive inside.
    double distance(const Point& x) const { return slack(x) / normal.norm(); }
};

/// Open convex polytope given as a finite intersection of open half-spaces,
/// optionally with its vertex list (dual description) and an interior witness.
///
/// The base point is the witness when given, otherwise the vertex average,
/// otherwise an LP Chebyshev center with radius capped at 1. Construction
/// fails when the interior is empty or when the vertex data disagrees with the
/// constraints.
class HPolytope {
public:
    explicit HPolytope(std::vector<Constraint> constraints,
                       std::vector<Point> vertices = {},
                       std::optional<Point> witness = std::nullopt,
                       const Tolerances& tol = default_tolerances());

    int dim() const { return static_cast<int>(constraints_.front().normal.size()); }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    bool has_vertices() const { return !vertices_.empty(); }
    const Point& base_point() const { return base_; }

    // Minimum signed distance to the constraint hyperplanes.
    double margin(const Point& x) const;

    // True when every coordinate is bounded above and below (LP check).
    bool is_bounded() const;

private:
    std::vector<Constraint> constraints_;
    std::vector<Point> vertices_;
    Point base_;
};

class EuclideanBall {
public:
    EuclideanBall(Point center, double radius);

    int dim() const { return static_cast<int>(center_.size()); }
    const Point& center() const { return center_; }
    double radius() const { return radius_; }

private:
    Point center_;
    double radius_;
};

// x -> matrix * x + translation, with a cached inverse.
class AffineMap {
public:
    AffineMap(Matrix matrix, Vector translation,
              const Tolerances& tol = default_tolerances());

    static AffineMap identity(int n);
    // x -> center + factor * (x - center); factor may be negative.
    static AffineMap homothety(const Point& center, double factor);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    const Vector& translation() const { return translation_; }
    const Matrix& inverse_matrix() const { return inverse_; }
    double min_singular_value() const { return sigma_min_; }

    Point apply(const Point& x) const { return matrix_ * x + translation_; }
    Vector apply_linear(const Vector& v) const { return matrix_ * v; }
    Point pull_back(const Point& y) const { return inverse_ * (y - translation_); }
    Vector pull_back_linear(const Vector& v) const { return inverse_ * v; }

    // outer o this
    AffineMap then(const AffineMap& outer) const;
    AffineMap inverse() const;

private:
    Matrix matrix_;
    Vector translation_;
    Matrix inverse_;
    double sigma_min_ = 0.0;
};

struct AffineImageNode;
struct IntersectionNode;

/// A proper open convex domain. Values are immutable and cheap to copy;
/// composite kinds share their children.
class ConvexDomain {
public:
    enum class Kind { Polytope, Ball, AffineImage, Intersection };

    ConvexDomain(HPolytope polytope);  // NOLINT(google-explicit-constructor)
    ConvexDomain(EuclideanBall ball);  // NOLINT(google-explicit-constructor)

    Kind kind() const;
    int dim() const;
    const Point& base_point() const;

    const HPolytope* polytope() const;
    const EuclideanBall* ball() const;
    const AffineImageNode* affine() const;
    const IntersectionNode* intersection() const;

private:
    struct Node;
    explicit ConvexDomain(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    friend ConvexDomain affine_image(const ConvexDomain&, const AffineMap&);
    friend ConvexDomain intersection(std::vector<ConvexDomain>, std::optional<Point>);

    std::shared_ptr<const Node> node_;
};

struct AffineImageNode {
    ConvexDomain inner;
    AffineMap map;
};

struct IntersectionNode {
    std::vector<ConvexDomain> parts;
};

/// Where the closed ray from x through y leaves the domain: a finite boundary
/// point x + t (y - x) with t >= 1, or a point at infinity when the whole ray
/// stays inside.
class Hit {
public:
    static Hit finite(Point point, double t);
    static Hit at_infinity(Direction direction);

    bool is_finite() const { return finite_; }
    const Point& point() const;
    double t() const;
    const Direction& direction() const;

private:
    Hit() = default;
    bool finite_ = false;
    Point point_;
    double t_ = 0.0;
    Direction direction_;
};

// Homogeneous coordinates in RP^n, unit norm; last coordinate 0 on H_infinity.
struct ProjectivePoint {
    Vector homogeneous;
};

// Outward normals of the supporting pieces active at a boundary point, in
// ambient coordinates; strictly_convex is set when a strictly convex piece
// (ball or its affine image) is active there.
struct SupportData {
    std::vector<Vector> normals;
    bool strictly_convex = false;
};

// Signed clearance: positive iff x is interior.
double contains(const ConvexDomain& domain, const Point& x);

Hit ray_boundary(const ConvexDomain& domain, const Point& x, const Point& y,
                 const Tolerances& tol = default_tolerances());

// Supporting functional at the boundary point a, normalized so that it
// vanishes at the domain's base point and equals 1 at a. Among several
// active pieces the one with the largest activation wins, lowest index on ties.
LinearForm supporting_functional(const ConvexDomain& domain, const Point& a,
                                 const Tolerances& tol = default_tolerances());

SupportData support_normals(const ConvexDomain& domain, const Point& a,
                            const Tolerances& tol = default_tolerances());

std::vector<std::size_t> active_face(const HPolytope& polytope, const Point& a,
                                     const Tolerances& tol = default_tolerances());

ConvexDomain affine_image(const ConvexDomain& domain, const AffineMap& map);

// The witness, when given, must be interior to every part; otherwise one is
// searched among the parts' base points and their average.
ConvexDomain intersection(std::vector<ConvexDomain> parts,
                          std::optional<Point> witness = std::nullopt);

// Image under y = center + factor (y - center). Polytopes and balls stay
// concrete; composite kinds are rebuilt around transformed children.
ConvexDomain homothety(const ConvexDomain& domain, const Point& center, double factor);

HPolytope transformed(const HPolytope& polytope, const AffineMap& map);

// Flattens polytopes, their affine images and intersections thereof.
std::optional<HPolytope> as_polytope(const ConvexDomain& domain);

ProjectivePoint to_projective(const Hit& hit);

// Points drawn along random rays from the base point, at a uniform fraction
// in [0, max_fraction) of the way to the boundary (rays that never leave are
// cut at Euclidean length 10).
std::vector<Point> sample_interior(const ConvexDomain& domain, int count,
                                   std::mt19937_64& rng, double max_fraction = 1.0);

}  // namespace funk
