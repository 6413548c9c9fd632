#include "funk/classical_oracles.hpp"
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

TEST(DivisionRatio, Values) {
    const Point a = P({0, 0}), b = P({1, 0});
    EXPECT_DOUBLE_EQ(division_ratio(a, b, P({0.5, 0})), 0.5);
    EXPECT_DOUBLE_EQ(division_ratio(a, b, a), 0.0);
    EXPECT_DOUBLE_EQ(division_ratio(a, b, b), 1.0);
    EXPECT_DOUBLE_EQ(division_ratio(a, b, P({-1, 0})), -1.0);
}

TEST(DivisionRatio, InvalidInputsThrow) {
    EXPECT_THROW(division_ratio(P({0, 0}), P({1, 0}), P({0.5, 0.1})), Error);
    EXPECT_THROW(division_ratio(P({0, 0}), P({0, 0}), P({0.5, 0})), Error);
}

TEST(Menelaus, HandInstance) {
    // Factors 1/3, -3 and -1.
    double p = menelaus_product(P({0, 0}), P({1, 0}), P({0, 1}), P({1.5, -0.5}), P({0, 0.25}),
                                P({0.5, 0}));
    EXPECT_NEAR(p, 1.0, 1e-15);
}

TEST(Menelaus, OffTransversalPointBreaksTheProduct) {
    double p = menelaus_product(P({0, 0}), P({1, 0}), P({0, 1}), P({1.5, -0.5}), P({0, 0.25}),
                                P({0.6, 0}));
    EXPECT_GT(std::abs(p - 1.0), 1e-2);
}

TEST(Menelaus, AffineImageKeepsTheProduct) {
    Matrix m(2, 2);
    m << -1, 0.3, 0.2, 2;
    AffineMap f(m, P({0.4, -1}));
    double p = menelaus_product(f.apply(P({0, 0})), f.apply(P({1, 0})), f.apply(P({0, 1})),
                                f.apply(P({1.5, -0.5})), f.apply(P({0, 0.25})),
                                f.apply(P({0.5, 0})));
    EXPECT_NEAR(p, 1.0, 1e-14);
}

TEST(Menelaus, DegenerateInputsThrow) {
    // Flat triangle.
    EXPECT_THROW(menelaus_product(P({0, 0}), P({1, 0}), P({2, 0}), P({1.5, 0}), P({1, 0}),
                                  P({0.5, 0})),
                 Error);
    // A' off the line BC.
    EXPECT_THROW(menelaus_product(P({0, 0}), P({1, 0}), P({0, 1}), P({1, 1}), P({0, 0.25}),
                                  P({0.5, 0})),
                 Error);
}

TEST(Ceva, MediansAndCentroidCevians) {
    const Point a = P({0, 0}), b = P({1, 0}), c = P({0, 1});
    EXPECT_NEAR(ceva_product(a, b, c, 0.5 * (b + c), 0.5 * (a + c), 0.5 * (a + b)), -1.0, 1e-15);
    // Cevians through (0.2, 0.3).
    const Point a1 = P({0.4, 0.6});
    const Point b1 = P({0, 0.3 / 0.8});
    const Point c1 = P({0.2 / 0.7, 0});
    EXPECT_NEAR(ceva_product(a, b, c, a1, b1, c1), -1.0, 1e-14);
    EXPECT_GT(std::abs(ceva_product(a, b, c, P({0.45, 0.55}), b1, c1) + 1.0), 1e-3);
}

TEST(CrossRatio, UnitIntervalGivesThree) {
    EXPECT_NEAR(cross_ratio(P({-1, 0}), P({0, 0}), P({0.5, 0}), P({1, 0})), 3.0, 1e-15);
    EXPECT_NEAR(0.5 * std::log(cross_ratio(P({-1, 0}), P({0, 0}), P({0.5, 0}), P({1, 0}))),
                hilbert(gen::unit_ball(2), P({0, 0}), P({0.5, 0})), 1e-15);
    EXPECT_DOUBLE_EQ(cross_ratio(P({-1, 0}), P({0.2, 0}), P({0.2, 0}), P({1, 0})), 1.0);
}

TEST(CrossRatio, ProjectiveMapOfTheLine) {
    // t -> (2t + 1) / (t + 3) keeps [-1, 1] in its domain.
    auto f = [](double t) { return P({(2 * t + 1) / (t + 3), 0}); };
    double before = cross_ratio(P({-1, 0}), P({-0.2, 0}), P({0.4, 0}), P({1, 0}));
    double after = cross_ratio(f(-1), f(-0.2), f(0.4), f(1));
    EXPECT_NEAR(after, before, 1e-9 * before);
}

TEST(CrossRatio, NonCollinearThrows) {
    EXPECT_THROW(cross_ratio(P({-1, 0}), P({0, 0}), P({0.5, 0.1}), P({1, 0})), Error);
}

TEST(ClassicalReplay, StrictAndAlignedCases) {
    HPolytope hex = gen::regular_polygon(6);
    ClassicalReplay bent = classical_replay(hex, P({-0.4, -0.1}), P({0.1, 0.5}), P({0.3, -0.3}));
    EXPECT_NEAR(bent.chained, bent.transversal, 1e-12 * bent.transversal);
    EXPECT_GT(bent.transversal, bent.exit_ratio);
    EXPECT_NEAR(bent.auxiliary, 1.0, 1e-12);

    // All three chords leave the square through the edge x1 = 1.
    HPolytope sq = gen::square();
    ClassicalReplay flat = classical_replay(sq, P({-0.5, 0.5}), P({0, 0.6}), P({0.5, 0.5}));
    EXPECT_NEAR(flat.transversal, flat.exit_ratio, 1e-12 * flat.exit_ratio);
    EXPECT_NEAR(std::log(flat.chained),
                funk::funk(sq, P({-0.5, 0.5}), P({0, 0.6})) +
                    funk::funk(sq, P({0, 0.6}), P({0.5, 0.5})),
                1e-12);
}

}  // namespace
