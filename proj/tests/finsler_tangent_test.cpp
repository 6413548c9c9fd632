#include "funk/finsler_tangent.hpp"
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

TEST(TangentNorm, UnitBallAtCenterIsEuclidean) {
    for (const Point& v : {P({1, 0}), P({0, -1}), P({0.6, 0.8})}) {
        EXPECT_NEAR(tangent_norm(gen::unit_ball(2), P({0, 0}), v), 1.0, 1e-15);
    }
}

TEST(TangentNorm, OffCenterBall) {
    EXPECT_NEAR(tangent_norm(gen::unit_ball(2), P({0.5, 0}), P({1, 0})), 2.0, 1e-15);
    EXPECT_NEAR(tangent_norm(gen::unit_ball(2), P({0.5, 0}), P({-1, 0})), 2.0 / 3.0, 1e-15);
}

TEST(TangentNorm, RecessionDirectionVanishes) {
    EXPECT_EQ(tangent_norm(gen::half_plane(), P({0, 1}), P({1, 0})), 0.0);
    EXPECT_EQ(tangent_norm(gen::half_plane(), P({0, 1}), P({0, 0})), 0.0);
}

TEST(TangentNorm, SquareIsMaxNorm) {
    EXPECT_NEAR(tangent_norm(gen::square(), P({0, 0}), P({0.3, -0.7})), 0.7, 1e-15);
}

TEST(TangentNorm, NonInteriorBaseThrows) {
    EXPECT_THROW(tangent_norm(gen::unit_ball(2), P({1, 0}), P({1, 0})), Error);
}

TEST(FiniteDifference, CenterOfTheBall) {
    DifferenceReport r = finite_difference_check(gen::unit_ball(2), P({0, 0}), P({0, 0}),
                                                 P({1, 0}), {1e-2, 1e-3, 1e-4});
    EXPECT_NEAR(r.limit, 1.0, 1e-15);
    ASSERT_EQ(r.rows.size(), 3u);
    for (std::size_t i = 0; i + 1 < r.rows.size(); ++i) {
        EXPECT_LT(r.rows[i + 1].error, r.rows[i].error);
    }
    EXPECT_NEAR(r.rows.back().quotient, 1.0, 1e-3);
    EXPECT_NEAR(r.slope, 1.0, 0.05);
    EXPECT_LE(r.rows.front().error, r.fitted_c * 1e-2 * (1 + 1e-12));
}

TEST(FiniteDifference, EqualPointsGiveZeroQuotients) {
    DifferenceReport r = finite_difference_check(gen::square(), P({0.1, 0}), P({0.3, 0.3}),
                                                 P({0.3, 0.3}), {1e-2, 1e-3});
    for (const auto& row : r.rows) EXPECT_EQ(row.quotient, 0.0);
}

TEST(FiniteDifference, RecessionDirectionGivesZero) {
    DifferenceReport r = finite_difference_check(gen::half_plane(), P({0, 1}), P({0, 0}),
                                                 P({1, 0}), {1e-2, 1e-3});
    EXPECT_EQ(r.limit, 0.0);
    for (const auto& row : r.rows) EXPECT_EQ(row.quotient, 0.0);
}

TEST(FiniteDifference, EscapingSampleThrows) {
    EXPECT_THROW(finite_difference_check(gen::unit_ball(2), P({0.5, 0}), P({0, 0}), P({100, 0}),
                                         {1e-2}),
                 Error);
}

}  // namespace
