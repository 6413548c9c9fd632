#include "funk/projection.hpp"
#include "funk/checks.hpp"
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

// {z : z = p}, written with two inequalities per coordinate.
ClosedPolyhedron singleton(const Point& p) {
    ClosedPolyhedron s;
    for (int i = 0; i < p.size(); ++i) {
        Vector e = Vector::Unit(p.size(), i);
        s.constraints.push_back({e, p(i)});
        s.constraints.push_back({-e, -p(i)});
    }
    return s;
}

// The closed segment [p, q] in the plane.
ClosedPolyhedron segment_set(const Point& p, const Point& q) {
    Vector d = q - p;
    Vector n = P({-d(1), d(0)});
    ClosedPolyhedron s;
    s.constraints.push_back({n, n.dot(p)});
    s.constraints.push_back({-n, -n.dot(p)});
    s.constraints.push_back({d, d.dot(q)});
    s.constraints.push_back({-d, -d.dot(p)});
    return s;
}

TEST(NearestOnSegment, PointOnTheSegment) {
    Foot f = nearest_on_segment(gen::square(), P({0.1, 0.1}), {P({-0.3, -0.3}), P({0.5, 0.5})});
    expect_near(f.point, P({0.1, 0.1}), 1e-9);
    EXPECT_NEAR(f.distance, 0.0, 1e-9);
}

TEST(NearestOnSegment, BallSymmetricSegment) {
    Foot f = nearest_on_segment(gen::unit_ball(2), P({0, 0}), {P({0.5, -0.5}), P({0.5, 0.5})});
    expect_near(f.point, P({0.5, 0}), 1e-9);
    EXPECT_NEAR(f.distance, std::log(2.0), 1e-12);
}

TEST(NearestOnSegment, SquarePlateauResolvesToMidpoint) {
    // F(0, (0.5, s)) = log 2 on the whole segment; the plateau midpoint wins.
    for (double start : {0.0, 0.3, 1.0}) {
        Foot f = nearest_on_segment(gen::square(), P({0, 0}), {P({0.5, -0.25}), P({0.5, 0.25})},
                                    start);
        expect_near(f.point, P({0.5, 0}), 1e-9);
        EXPECT_NEAR(f.distance, std::log(2.0), 1e-12);
    }
}

TEST(NearestOnSegment, EndpointOutsideThrows) {
    EXPECT_THROW(nearest_on_segment(gen::square(), P({0, 0}), {P({0.5, 0}), P({1.5, 0})}),
                 Error);
}

TEST(NearestOnConvex, Singleton) {
    const Point z = P({0.4, -0.2});
    Foot f = nearest_on_convex(gen::square(), P({-0.3, 0.5}), singleton(z));
    expect_near(f.point, z, 1e-9);
    EXPECT_NEAR(f.distance, funk::funk(gen::square(), P({-0.3, 0.5}), z), 1e-9);
}

TEST(NearestOnConvex, SquareHalfSpace) {
    ClosedPolyhedron a = closure(gen::square());
    a.constraints.push_back({P({-1, 0}), -0.5});  // y1 >= 0.5
    Foot f = nearest_on_convex(gen::square(), P({0, 0}), a);
    EXPECT_NEAR(f.point(0), 0.5, 1e-9);
    EXPECT_NEAR(f.distance, std::log(2.0), 1e-10);
    EXPECT_NEAR(convex_distance_lp(gen::square(), P({0, 0}), a), std::log(2.0), 1e-12);
    EXPECT_TRUE(f.certificate.has_value());
    EXPECT_TRUE(foot_certificate(gen::square(), P({0, 0}), f.point, a));
}

TEST(NearestOnConvex, AgreesWithSegmentSearchOnThinSets) {
    const Point p = P({0.2, 0.6}), q = P({0.7, -0.3}), x = P({-0.3, -0.2});
    Foot thin = nearest_on_convex(gen::square(), x, segment_set(p, q));
    Foot seg = nearest_on_segment(gen::square(), x, {p, q});
    EXPECT_NEAR(thin.distance, seg.distance, 1e-8);
    expect_near(thin.point, seg.point, 1e-6);
}

TEST(NearestOnConvex, PointInsideTheSet) {
    HPolytope strip(std::vector<Constraint>{{P({-1, 0}), -0.5}, {P({1, 0}), 0.9},
                                            {P({0, 1}), 0.25}, {P({0, -1}), 0.25}});
    Foot f = nearest_on_convex(gen::square(), P({0.7, 0}), strip);
    expect_near(f.point, P({0.7, 0}), 0.0);
    EXPECT_EQ(f.distance.value(), 0.0);
}

TEST(NearestOnConvex, SetLeavingTheDomainThrows) {
    HPolytope big = transformed(gen::square(), AffineMap::homothety(P({0, 0}), 2.0));
    HPolytope shifted = transformed(gen::square(), AffineMap(Matrix::Identity(2, 2), P({1.5, 0})));
    EXPECT_THROW(nearest_on_convex(gen::square(), P({0, 0}), shifted), Error);
    EXPECT_THROW(nearest_on_convex(gen::square(), P({0, 0}), big), Error);
}

TEST(FootCertificate, RejectsClearlyWorsePoints) {
    ClosedPolyhedron a = closure(gen::square());
    a.constraints.push_back({P({-1, 0}), -0.5});
    // (0.9, 0.8) is in A with F(0, .) = log 10, far above log 2.
    EXPECT_FALSE(foot_certificate(gen::square(), P({0, 0}), P({0.9, 0.8}), a));
}

TEST(FootCertificate, ZeroDistanceIsVacuouslyOptimal) {
    // Half-plane set {y2 >= 1} above x: the ray x -> y never leaves.
    ClosedPolyhedron a;
    a.constraints.push_back({P({0, -1}), -1.0});
    EXPECT_TRUE(foot_certificate(gen::half_plane(), P({0, 0.5}), P({3, 2}), a));
}

TEST(IsPerpendicular, BallPole) {
    LinearForm flat{P({0, 1}), 0.0};
    EXPECT_TRUE(is_perpendicular(gen::unit_ball(2), P({0, 0}), P({0, 1}), flat));
    LinearForm tilted{P({-0.1, 1}), 0.0};
    EXPECT_FALSE(is_perpendicular(gen::unit_ball(2), P({0, 0}), P({0, 1}), tilted));
}

TEST(IsPerpendicular, SquareEdgeAndCorner) {
    const Point x = P({0.2, 0.3});
    LinearForm vertical{P({1, 0}), -0.2};
    EXPECT_TRUE(is_perpendicular(gen::square(), x, P({1, 0.5}), vertical));
    LinearForm horizontal{P({0, 1}), -0.3};
    EXPECT_FALSE(is_perpendicular(gen::square(), x, P({1, 0.5}), horizontal));
    // At a corner any normal in the cone of the two edge normals is allowed.
    LinearForm diagonal{P({1, 1}), -0.5};
    EXPECT_TRUE(is_perpendicular(gen::square(), x, P({1, 1}), diagonal));
}

TEST(IsPerpendicular, PlaneMustPassThroughTheBase) {
    LinearForm off{P({0, 1}), -0.5};
    EXPECT_THROW(is_perpendicular(gen::unit_ball(2), P({0, 0}), P({0, 1}), off), Error);
}

TEST(SquareNonUniqueness, WitnessFound) {
    EXPECT_TRUE(checks::square_nonuniqueness(1e-9).pass);
}

TEST(ForwardBallMeets, MonotoneInRadius) {
    ClosedPolyhedron a = closure(gen::square());
    a.constraints.push_back({P({-1, 0}), -0.5});
    EXPECT_FALSE(forward_ball_meets(gen::square(), P({0, 0}), a, 0.69));
    EXPECT_TRUE(forward_ball_meets(gen::square(), P({0, 0}), a, 0.70));
}

}  // namespace
