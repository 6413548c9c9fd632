#include "funk/metric_engine.hpp"
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

const double kLog2 = std::log(2.0);
const double kHalfLog3 = 0.5 * std::log(3.0);

TEST(Funk, SquareAxisValue) {
    EXPECT_NEAR(funk::funk(gen::square(), P({0, 0}), P({0.5, 0})), kLog2, 1e-15);
}

TEST(Funk, EqualPointsGiveZero) {
    EXPECT_EQ(funk::funk(gen::square(), P({0.3, 0.1}), P({0.3, 0.1})).value(), 0.0);
    EXPECT_EQ(funk::funk(gen::unit_ball(3), P({0, 0.2, 0}), P({0, 0.2, 0})).value(), 0.0);
}

TEST(Funk, HalfPlaneFormula) {
    // max(0, log(x2 / y2)) for the upper half-plane.
    EXPECT_NEAR(funk::funk(gen::half_plane(), P({0, 2}), P({5, 1})), kLog2, 1e-15);
    EXPECT_EQ(funk::funk(gen::half_plane(), P({0, 1}), P({3, 2})).value(), 0.0);
}

TEST(Funk, ExteriorPointThrows) {
    EXPECT_THROW(funk::funk(gen::square(), P({0, 0}), P({1.5, 0})), Error);
}

TEST(ReverseFunk, Values) {
    EXPECT_NEAR(reverse_funk(gen::square(), P({0, 0}), P({0.5, 0})), std::log(1.5), 1e-15);
    EXPECT_NEAR(reverse_funk(gen::half_plane(), P({0, 1}), P({0, 2})), kLog2, 1e-15);
    EXPECT_EQ(reverse_funk(gen::square(), P({0.2, 0}), P({0.2, 0})).value(), 0.0);
}

TEST(Hilbert, KleinAndSquareValues) {
    EXPECT_NEAR(hilbert(gen::unit_ball(2), P({0, 0}), P({0.5, 0})), kHalfLog3, 1e-15);
    EXPECT_NEAR(hilbert(gen::square(), P({0, 0}), P({0.5, 0})), kHalfLog3, 1e-15);
    EXPECT_EQ(hilbert(gen::square(), P({0.1, 0}), P({0.1, 0})).value(), 0.0);
}

TEST(RelativeFunk, WholePatchReducesToFunk) {
    RelativeFunk rf(gen::square(), std::nullopt);
    EXPECT_NEAR(rf(P({0, 0}), P({0.5, 0})), kLog2, 1e-15);
}

TEST(RelativeFunk, SelfRelativeIsTwiceHilbert) {
    ConvexDomain ball = gen::unit_ball(2);
    EXPECT_NEAR(relative_funk(ball, ball, P({0, 0}), P({0.5, 0})), std::log(3.0), 1e-14);
    EXPECT_EQ(relative_funk(ball, ball, P({0.1, 0}), P({0.1, 0})).value(), 0.0);
}

TEST(RelativeFunk, SumOfFunkAndReverseFunkOfEnvelope) {
    ConvexDomain inner = gen::square();
    ConvexDomain outer = HPolytope(gen::cube(2).constraints(), {}, std::nullopt);
    ConvexDomain big = homothety(outer, P({0, 0}), 2.0);
    Point x = P({0.1, -0.3}), y = P({0.6, 0.2});
    EXPECT_NEAR(relative_funk(inner, big, x, y),
                funk::funk(inner, x, y) + reverse_funk(big, x, y), 1e-14);
}

TEST(RelativeFunk, ContainmentViolationThrows) {
    ConvexDomain big = homothety(gen::square(), P({0, 0}), 2.0);
    EXPECT_THROW(RelativeFunk(big, ConvexDomain(gen::square())), Error);
}

TEST(MaxSymmetrized, Values) {
    EXPECT_NEAR(max_symmetrized(gen::square(), P({0, 0}), P({0.5, 0})), kLog2, 1e-15);
    EXPECT_EQ(max_symmetrized(gen::half_plane(), P({0, 1}), P({1, 1})).value(), 0.0);
    EXPECT_EQ(max_symmetrized(gen::square(), P({0.4, 0}), P({0.4, 0})).value(), 0.0);
}

TEST(PolytopeClosedForm, OrthantAndSquare) {
    EXPECT_NEAR(funk_polytope_closed_form(gen::orthant(2), P({2, 1}), P({1, 1})), kLog2, 1e-15);
    EXPECT_NEAR(funk_polytope_closed_form(gen::square(), P({0, 0}), P({0.5, 0})),
                funk::funk(gen::square(), P({0, 0}), P({0.5, 0})), 1e-15);
    EXPECT_EQ(funk_polytope_closed_form(gen::square(), P({0.2, 0.3}), P({0.2, 0.3})).value(), 0.0);
    EXPECT_THROW(funk_polytope_closed_form(gen::square(), P({0, 0}), P({1, 0})), Error);
}

TEST(HilbertClosedForm, MatchesRayCast) {
    EXPECT_NEAR(hilbert_polytope_closed_form(gen::square(), P({0, 0}), P({0.5, 0})), kHalfLog3,
                1e-15);
}

TEST(UnitBallClosedForm, Values) {
    EXPECT_NEAR(funk_unit_ball_closed_form(P({0, 0}), P({0.5, 0})), kLog2, 1e-15);
    EXPECT_EQ(funk_unit_ball_closed_form(P({0.3, 0}), P({0.3, 0})).value(), 0.0);
    EXPECT_NEAR(funk_unit_ball_closed_form(P({0.3, 0}), P({0.3, 0.4})),
                funk::funk(gen::unit_ball(2), P({0.3, 0}), P({0.3, 0.4})), 1e-10);
    EXPECT_THROW(funk_unit_ball_closed_form(P({1.2, 0}), P({0, 0})), Error);
}

TEST(Funk1D, BothOrientations) {
    Segment1D s{-1.0, 1.0};
    EXPECT_NEAR(funk_1d(s, 0.0, 0.5), kLog2, 1e-15);
    EXPECT_NEAR(funk_1d(s, 0.5, 0.0), std::log(1.5), 1e-15);
    EXPECT_EQ(funk_1d(s, 0.3, 0.3).value(), 0.0);
    EXPECT_THROW(funk_1d(s, 0.0, 1.0), Error);
}

TEST(DivisionRatio, WorkedInstance) {
    // Interval (-1, 1), x = 0, y = 0.5, z = 0.75.
    EXPECT_NEAR(ratio_from_distances(kLog2, std::log(4.0)), 1.5, 1e-15);
    EXPECT_NEAR(distance_from_ratio(kLog2, 1.5), std::log(4.0), 1e-15);
    EXPECT_NEAR(funk_1d({-1.0, 1.0}, 0.0, 0.75), std::log(4.0), 1e-15);
}

TEST(DivisionRatio, EndpointCases) {
    EXPECT_NEAR(ratio_from_distances(kLog2, kLog2), 1.0, 1e-15);
    EXPECT_EQ(ratio_from_distances(kLog2, 0.0), 0.0);
    EXPECT_NEAR(distance_from_ratio(kLog2, 1.0), kLog2, 1e-15);
    EXPECT_EQ(distance_from_ratio(kLog2, 0.0).value(), 0.0);
}

TEST(DivisionRatio, InvalidInputsThrow) {
    EXPECT_THROW(ratio_from_distances(0.0, 1.0), Error);
    // e^F + t (1 - e^F) = 0 at t = 2 for F = log 2: z sits on the boundary.
    EXPECT_THROW(distance_from_ratio(kLog2, 2.0), Error);
}

TEST(OrthantLog, MapAndDistance) {
    EXPECT_EQ(orthant_log_map(P({1, 1})), P({0, 0}));
    Point u = orthant_log_map(P({std::exp(1.0), 1}));
    EXPECT_NEAR(u(0), 1.0, 1e-15);
    EXPECT_EQ(u(1), 0.0);
    EXPECT_NEAR(orthant_log_distance(P({kLog2, 0}), P({0, 0})), kLog2, 1e-15);
    EXPECT_NEAR(funk::funk(gen::orthant(2), P({2, 1}), P({1, 1})), kLog2, 1e-15);
    EXPECT_THROW(orthant_log_map(P({1, 0})), Error);
}

TEST(WeakDistance, RejectsNegativeAndNonFinite) {
    EXPECT_THROW(WeakDistance(-1.0), Error);
    EXPECT_THROW(WeakDistance(std::nan("")), Error);
}

}  // namespace
