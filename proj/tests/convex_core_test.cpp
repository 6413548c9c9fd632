#include "funk/convex_core.hpp"
#include "funk/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>

namespace {

using namespace funk;

Point P(std::initializer_list<double> xs) {
    Point p(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) p(i++) = x;
    return p;
}

void expect_near(const Vector& a, const Vector& b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (int i = 0; i < a.size(); ++i) EXPECT_NEAR(a(i), b(i), tol) << "coordinate " << i;
}

TEST(Contains, SignedMargin) {
    EXPECT_DOUBLE_EQ(contains(gen::square(), P({0, 0})), 1.0);
    EXPECT_DOUBLE_EQ(contains(gen::unit_ball(2), P({1, 0})), 0.0);
    EXPECT_DOUBLE_EQ(contains(gen::unit_ball(2), P({2, 0})), -1.0);
}

TEST(Contains, DimensionMismatchThrows) {
    EXPECT_THROW(contains(gen::square(), P({0, 0, 0})), Error);
}

TEST(RayBoundary, SquareAxis) {
    Hit h = ray_boundary(gen::square(), P({0, 0}), P({0.5, 0}));
    ASSERT_TRUE(h.is_finite());
    expect_near(h.point(), P({1, 0}), 1e-15);
    EXPECT_DOUBLE_EQ(h.t(), 2.0);
}

TEST(RayBoundary, HalfPlaneParallelRayLeavesAtInfinity) {
    Hit h = ray_boundary(gen::half_plane(), P({0, 1}), P({1, 1}));
    ASSERT_FALSE(h.is_finite());
    expect_near(h.direction().normalized(), P({1, 0}), 1e-15);
}

TEST(RayBoundary, BallRadial) {
    Hit h = ray_boundary(gen::unit_ball(2), P({0, 0}), P({0, 0.5}));
    ASSERT_TRUE(h.is_finite());
    expect_near(h.point(), P({0, 1}), 1e-15);
    EXPECT_NEAR(h.t(), 2.0, 1e-15);
}

TEST(RayBoundary, IntersectionTakesEarliestExit) {
    ConvexDomain both = intersection({gen::square(), gen::unit_ball(2)});
    Hit h = ray_boundary(both, P({0, 0}), P({0.5, 0.5}));
    ASSERT_TRUE(h.is_finite());
    expect_near(h.point(), P({std::sqrt(0.5), std::sqrt(0.5)}), 1e-12);
}

TEST(RayBoundary, RejectsExteriorStartAndCoincidentPoints) {
    EXPECT_THROW(ray_boundary(gen::square(), P({2, 0}), P({0, 0})), Error);
    EXPECT_THROW(ray_boundary(gen::square(), P({0.1, 0}), P({0.1, 0})), Error);
}

TEST(SupportingFunctional, SquareEdge) {
    LinearForm h = supporting_functional(gen::square(), P({1, 0}));
    expect_near(h.coeffs, P({1, 0}), 1e-15);
    EXPECT_NEAR(h.offset, 0.0, 1e-15);
}

TEST(SupportingFunctional, BallPole) {
    LinearForm h = supporting_functional(gen::unit_ball(2), P({0, 1}));
    expect_near(h.coeffs, P({0, 1}), 1e-15);
    EXPECT_NEAR(h.offset, 0.0, 1e-15);
}

TEST(SupportingFunctional, CornerPicksLowestIndex) {
    LinearForm h = supporting_functional(gen::square(), P({1, 1}));
    expect_near(h.coeffs, P({1, 0}), 1e-15);
    EXPECT_NEAR(h(P({1, 1})), 1.0, 1e-15);
}

TEST(SupportingFunctional, NormalizedAtShiftedBasePoint) {
    // Witness away from the origin: h vanishes there and is 1 on the face.
    HPolytope sq(gen::square().constraints(), {}, P({0.5, 0.5}));
    LinearForm h = supporting_functional(sq, P({1, 0}));
    EXPECT_NEAR(h(P({0.5, 0.5})), 0.0, 1e-15);
    EXPECT_NEAR(h(P({1, -0.3})), 1.0, 1e-15);
}

TEST(SupportingFunctional, InteriorPointThrows) {
    EXPECT_THROW(supporting_functional(gen::square(), P({0.5, 0})), Error);
}

TEST(ActiveFace, EdgeCornerAndTolerance) {
    HPolytope sq = gen::square();
    EXPECT_EQ(active_face(sq, P({1, 0})), (std::vector<std::size_t>{0}));
    EXPECT_EQ(active_face(sq, P({1, 1})), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(active_face(sq, P({0.999999999, 0})), (std::vector<std::size_t>{0}));
    EXPECT_THROW(active_face(sq, P({0, 0})), Error);
}

TEST(AffineImage, IdentityIsBitIdentical) {
    HPolytope sq = gen::square();
    ConvexDomain image = affine_image(sq, AffineMap::identity(2));
    Hit a = ray_boundary(sq, P({0.1, 0.2}), P({0.3, -0.1}));
    Hit b = ray_boundary(image, P({0.1, 0.2}), P({0.3, -0.1}));
    EXPECT_EQ(a.t(), b.t());
    EXPECT_EQ(contains(sq, P({0.3, 0.4})), contains(image, P({0.3, 0.4})));
}

TEST(AffineImage, ScaledBallMargin) {
    ConvexDomain big = affine_image(gen::unit_ball(2), AffineMap::homothety(P({0, 0}), 2.0));
    EXPECT_NEAR(contains(big, P({1.5, 0})), 0.5, 1e-15);
}

TEST(AffineImage, RotatedSquareHit) {
    const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
    Matrix r(2, 2);
    r << c, -s, s, c;
    ConvexDomain rotated = affine_image(gen::square(), AffineMap(r, Vector::Zero(2)));
    Hit h = ray_boundary(rotated, P({0, 0}), P({0.5 * c, 0.5 * s}));
    ASSERT_TRUE(h.is_finite());
    expect_near(h.point(), P({c, s}), 1e-14);
}

TEST(AffineMap, SingularMatrixThrows) {
    Matrix m(2, 2);
    m << 1, 2, 2, 4;
    EXPECT_THROW(AffineMap(m, Vector::Zero(2)), Error);
}

TEST(ToProjective, Embeddings) {
    expect_near(to_projective(Hit::finite(P({1, 0}), 1.0)).homogeneous,
                P({1, 0, 1}) / std::sqrt(2.0), 1e-15);
    expect_near(to_projective(Hit::at_infinity(P({1, 0}))).homogeneous, P({1, 0, 0}), 1e-15);
    expect_near(to_projective(Hit::finite(P({0, 0}), 1.0)).homogeneous, P({0, 0, 1}), 1e-15);
}

TEST(HPolytope, EmptyInteriorThrows) {
    std::vector<Constraint> cs = {{P({1, 0}), 0.0}, {P({-1, 0}), 0.0}, {P({0, 1}), 1.0},
                                  {P({0, -1}), 1.0}};
    EXPECT_THROW(HPolytope{cs}, Error);
}

TEST(HPolytope, InconsistentVertexThrows) {
    std::vector<Point> vertices = {P({1, 1}), P({-1, 1}), P({-1, -1}), P({2, -1})};
    EXPECT_THROW(HPolytope(gen::square().constraints(), vertices), Error);
}

TEST(HPolytope, BoundedDetection) {
    EXPECT_TRUE(gen::square().is_bounded());
    EXPECT_FALSE(gen::half_plane().is_bounded());
}

TEST(AsPolytope, FlattensAffineImagesAndIntersections) {
    AffineMap shift(Matrix::Identity(2, 2), P({0.5, 0}));
    ConvexDomain d = intersection({gen::square(), affine_image(gen::square(), shift)});
    auto flat = as_polytope(d);
    ASSERT_TRUE(flat.has_value());
    EXPECT_EQ(flat->constraints().size(), 8u);
    EXPECT_NEAR(flat->margin(P({0, 0})), 0.5, 1e-15);
    EXPECT_FALSE(as_polytope(gen::unit_ball(2)).has_value());
}

TEST(Homothety, SquareShrinksAboutCenter) {
    ConvexDomain half = homothety(gen::square(), P({0, 0}), 0.5);
    EXPECT_NEAR(contains(half, P({0.4, 0})), 0.1, 1e-15);
    EXPECT_LT(contains(half, P({0.6, 0})), 0.0);
}

}  // namespace
