#include "funk/ball_geometry.hpp"
#include "funk/generators.hpp"
#include "funk/metric_engine.hpp"

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

const double kLog2 = std::log(2.0);

TEST(ForwardBall, SquareHalvesAboutCenter) {
    MetricBall b = forward_ball(gen::square(), P({0, 0}), kLog2);
    EXPECT_NEAR(contains(b.realized, P({0.4, 0})), 0.1, 1e-15);
    EXPECT_NEAR(contains(b.realized, P({0, -0.5})), 0.0, 1e-15);
    EXPECT_TRUE(in_ball(b, P({0.49, 0.49})));
    EXPECT_FALSE(in_ball(b, P({0.51, 0})));
}

TEST(ForwardBall, UnitBallCenterAndRadius) {
    const Point x0 = P({0.3, -0.4});
    const double rho = 0.7;
    MetricBall b = forward_ball(gen::unit_ball(2), x0, rho);
    const EuclideanBall* e = b.realized.ball();
    ASSERT_NE(e, nullptr);
    expect_near(e->center(), std::exp(-rho) * x0, 1e-15);
    EXPECT_NEAR(e->radius(), 1.0 - std::exp(-rho), 1e-15);
}

TEST(ForwardBall, TinyRadiusShrinksToCenter) {
    MetricBall b = forward_ball(gen::square(), P({0.2, 0}), 1e-6);
    EXPECT_TRUE(in_ball(b, P({0.2 + 5e-7, 0})));
    EXPECT_FALSE(in_ball(b, P({0.2 + 1e-5, 0})));
}

TEST(ForwardBall, InvalidArgumentsThrow) {
    EXPECT_THROW(forward_ball(gen::square(), P({0, 0}), 0.0), Error);
    EXPECT_THROW(forward_ball(gen::square(), P({1, 0}), 1.0), Error);
    EXPECT_THROW(backward_ball(gen::square(), P({0, 0}), -1.0), Error);
}

TEST(BackwardBall, SquareAtLog2IsTheSquare) {
    // Reflected homothet with factor e^rho - 1 = 1 is the square itself.
    MetricBall b = backward_ball(gen::square(), P({0, 0}), kLog2);
    EXPECT_TRUE(in_ball(b, P({0.99, -0.99})));
    EXPECT_TRUE(in_ball(b, P({-0.99, 0.5})));
}

TEST(BackwardBall, LargeRadiusGivesTheDomain) {
    MetricBall b = backward_ball(gen::square(), P({0.3, 0.1}), 10.0);
    for (const Point& y : {P({0.999, 0.999}), P({-0.999, -0.999}), P({0.999, -0.999})}) {
        EXPECT_TRUE(in_ball(b, y));
    }
}

TEST(BackwardBall, MembershipMatchesReverseDistance) {
    MetricBall b = backward_ball(gen::square(), P({0.2, 0.1}), 0.3);
    for (const Point& y : {P({0.1, 0.1}), P({0.5, 0.3}), P({-0.2, 0.4}), P({0.3, -0.2})}) {
        EXPECT_EQ(in_ball(b, y), funk::funk(gen::square(), y, P({0.2, 0.1})) < 0.3);
    }
}

TEST(SphereSample, SquareAxisDirections) {
    MetricBall b = forward_ball(gen::square(), P({0, 0}), kLog2);
    auto pts = sphere_sample(b, 4);
    ASSERT_EQ(pts.size(), 4u);
    expect_near(pts[0].point, P({0.5, 0}), 1e-15);
    expect_near(pts[1].point, P({0, 0.5}), 1e-15);
    expect_near(pts[2].point, P({-0.5, 0}), 1e-15);
    expect_near(pts[3].point, P({0, -0.5}), 1e-15);
    for (const auto& s : pts) EXPECT_TRUE(s.on_sphere);
}

TEST(SphereSample, UnitBallForwardSphere) {
    const Point x0 = P({-0.5, 0.2});
    const double rho = 1.3;
    MetricBall b = forward_ball(gen::unit_ball(2), x0, rho);
    for (const auto& s : sphere_sample(b, 32)) {
        EXPECT_NEAR((s.point - std::exp(-rho) * x0).norm(), 1.0 - std::exp(-rho), 1e-9);
        EXPECT_NEAR(funk::funk(gen::unit_ball(2), x0, s.point), rho, 1e-8);
    }
}

TEST(SphereSample, ThreeDistinctPointsAndMinimumCount) {
    MetricBall b = forward_ball(gen::unit_ball(2), P({0, 0}), 1.0);
    auto pts = sphere_sample(b, 3);
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_GT((pts[0].point - pts[1].point).norm(), 0.1);
    EXPECT_GT((pts[1].point - pts[2].point).norm(), 0.1);
    EXPECT_GT((pts[0].point - pts[2].point).norm(), 0.1);
    EXPECT_THROW(sphere_sample(b, 2), Error);
}

TEST(SphereSample, BackwardSamplesOnDomainBoundaryAreFlagged) {
    MetricBall b = backward_ball(gen::square(), P({0, 0}), 10.0);
    for (const auto& s : sphere_sample(b, 16)) {
        EXPECT_FALSE(s.on_sphere);
        EXPECT_NEAR(contains(gen::square(), s.point), 0.0, 1e-12);
    }
}

TEST(SphereDirections, HigherDimensionalUnitAndDeterministic) {
    auto a = sphere_directions(4, 50, 7);
    auto b = sphere_directions(4, 50, 7);
    ASSERT_EQ(a.size(), 50u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i].norm(), 1.0, 1e-14);
        EXPECT_EQ(a[i], b[i]);
    }
}

TEST(Sandwich, SquareConstants) {
    SandwichConstants c = sandwich(gen::square(), P({0, 0}));
    EXPECT_DOUBLE_EQ(c.lambda_x, 1.0);
    EXPECT_DOUBLE_EQ(c.Lambda_x, std::sqrt(2.0));
    SandwichConstants d = sandwich(gen::square(), P({0.5, 0}));
    EXPECT_DOUBLE_EQ(d.lambda_x, 0.5);
    EXPECT_DOUBLE_EQ(d.Lambda_x, std::sqrt(1.5 * 1.5 + 1.0));
}

TEST(Sandwich, RegularPolygonCenter) {
    const int k = 7;
    SandwichConstants c = sandwich(gen::regular_polygon(k, 2.0), P({0, 0}));
    EXPECT_NEAR(c.lambda_x, 2.0 * std::cos(M_PI / k), 1e-14);
    EXPECT_NEAR(c.Lambda_x, 2.0, 1e-14);
}

TEST(Sandwich, NeedsVertices) {
    HPolytope bare(gen::square().constraints());
    EXPECT_THROW(sandwich(bare, P({0, 0})), Error);
}

TEST(BallSimilarity, MapsOneSphereOntoAnother) {
    HPolytope poly = gen::regular_polygon(5);
    MetricBall from = forward_ball(poly, P({0.1, 0.2}), 0.4);
    MetricBall to = forward_ball(poly, P({-0.3, 0.0}), 1.1);
    AffineMap m = ball_similarity(from, to);
    for (const auto& s : sphere_sample(from, 12)) {
        EXPECT_NEAR(contains(to.realized, m.apply(s.point)), 0.0, 1e-12);
    }
}

TEST(BallSimilarity, EqualRadiiGiveATranslation) {
    MetricBall from = forward_ball(gen::square(), P({0.1, 0.2}), 0.5);
    MetricBall to = forward_ball(gen::square(), P({-0.3, 0.4}), 0.5);
    AffineMap m = ball_similarity(from, to);
    EXPECT_TRUE(m.matrix().isApprox(Matrix::Identity(2, 2), 1e-15));
}

}  // namespace
