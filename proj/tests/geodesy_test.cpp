#include "funk/geodesy.hpp"
#include "funk/generators.hpp"

#include <gtest/gtest.h>

#include <initializer_list>

namespace {

using namespace funk;

Point P(std::initializer_list<double> xs) {
    Point p(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) p(i++) = x;
    return p;
}

TEST(TriangleReport, CollinearTripleIsAligned) {
    TriangleReport r =
        triangle_report(gen::unit_ball(2), P({-0.4, -0.2}), P({0.0, 0.0}), P({0.4, 0.2}));
    EXPECT_LE(std::abs(r.defect), 1e-12);
    EXPECT_TRUE(r.aligned);
    ASSERT_EQ(r.hits.size(), 3u);
    EXPECT_TRUE(r.hits[0].homogeneous.isApprox(r.hits[2].homogeneous, 1e-12));
}

TEST(TriangleReport, SquareSameEdgeTriple) {
    TriangleReport r =
        triangle_report(gen::square(), P({-0.5, 0.5}), P({0, 0.6}), P({0.5, 0.5}));
    EXPECT_LE(r.defect, 1e-9);
    EXPECT_TRUE(r.aligned);
}

TEST(TriangleReport, GenericBallTripleIsStrict) {
    TriangleReport r =
        triangle_report(gen::unit_ball(2), P({-0.5, 0.1}), P({0.1, 0.4}), P({0.3, -0.3}));
    EXPECT_GT(r.defect, 1e-3);
    EXPECT_FALSE(r.aligned);
}

TEST(TriangleReport, HitsAtInfinityAreHandled) {
    // All three chords are parallel to the boundary line: hits at infinity.
    TriangleReport r =
        triangle_report(gen::half_plane(), P({0, 1}), P({1, 1}), P({3, 1}));
    EXPECT_EQ(r.defect, 0.0);
    EXPECT_TRUE(r.aligned);
}

TEST(ProjectivelyAligned, RankDecision) {
    std::vector<ProjectivePoint> line = {{P({1, 0, 1}).normalized()},
                                         {P({1, 1, 1}).normalized()},
                                         {P({0, 1, 0})}};
    EXPECT_TRUE(projectively_aligned(line, 1e-7));
    std::vector<ProjectivePoint> spread = {{P({1, 0, 1}).normalized()},
                                           {P({0, 1, 1}).normalized()},
                                           {P({0, 0, 1})}};
    double ratio = 0.0;
    EXPECT_FALSE(projectively_aligned(spread, 1e-7, &ratio));
    EXPECT_GT(ratio, 1e-2);
}

TEST(ConeMember, SquareEdgeCone) {
    HPolytope sq = gen::square();
    FaceCone cone = make_face_cone(sq, P({0, 0}), {0});
    EXPECT_TRUE(cone_member(sq, cone, P({1, 0})));
    EXPECT_TRUE(cone_member(sq, cone, P({1, 0.9})));
    EXPECT_FALSE(cone_member(sq, cone, P({-1, 0})));
    EXPECT_FALSE(cone_member(sq, cone, P({0.5, 1})));
    EXPECT_TRUE(cone_member(sq, cone, P({0, 0})));
}

TEST(ConeMember, CornerConeIsOneRay) {
    HPolytope sq = gen::square();
    FaceCone corner = make_face_cone(sq, P({0, 0}), {0, 2});
    EXPECT_TRUE(cone_member(sq, corner, P({2, 2})));
    EXPECT_FALSE(cone_member(sq, corner, P({1, 0.9})));
}

TEST(ConeMember, RecessionDirectionsOfUnboundedFaces) {
    HPolytope hp = gen::half_plane();
    FaceCone cone = make_face_cone(hp, P({0, 1}), {0});
    EXPECT_TRUE(cone_member(hp, cone, P({1, 0})));
    EXPECT_TRUE(cone_member(hp, cone, P({1, -1})));
    EXPECT_FALSE(cone_member(hp, cone, P({0, 1})));
}

TEST(ConeMember, InvalidFacesThrow) {
    HPolytope sq = gen::square();
    EXPECT_THROW(make_face_cone(sq, P({0, 0}), {7}), Error);
    EXPECT_THROW(make_face_cone(sq, P({0, 0}), {0, 1}), Error);  // opposite edges
    EXPECT_THROW(make_face_cone(sq, P({0, 0}), {}), Error);
    EXPECT_THROW(make_face_cone(sq, P({2, 0}), {0}), Error);
}

TEST(VerifyGeodesic, SubdividedSegment) {
    GeodesicCheck g = verify_geodesic(
        gen::unit_ball(3), {P({-0.5, 0, 0.1}), P({-0.2, 0.1, 0.1}), P({0.1, 0.2, 0.1}),
                            P({0.4, 0.3, 0.1})});
    EXPECT_TRUE(g.is_geodesic);
    EXPECT_LE(std::abs(g.defect), 1e-12);
}

TEST(VerifyGeodesic, SquareBentPolyline) {
    GeodesicCheck g =
        verify_geodesic(gen::square(), {P({-0.5, 0.5}), P({0, 0.6}), P({0.5, 0.5})});
    EXPECT_TRUE(g.is_geodesic);
    // The three chords all leave through the edge x1 = 1.
    EXPECT_EQ(common_face(gen::square(), {P({-0.5, 0.5}), P({0, 0.6}), P({0.5, 0.5})}),
              (std::vector<std::size_t>{0}));
}

TEST(VerifyGeodesic, BallBentPolylineFails) {
    GeodesicCheck g =
        verify_geodesic(gen::unit_ball(2), {P({-0.5, 0.5}), P({0, 0.6}), P({0.5, 0.5})});
    EXPECT_FALSE(g.is_geodesic);
    EXPECT_GT(g.defect, 1e-6);
}

TEST(VerifyGeodesic, NeedsTwoInteriorPoints) {
    EXPECT_THROW(verify_geodesic(gen::square(), {P({0, 0})}), Error);
    EXPECT_THROW(verify_geodesic(gen::square(), {P({0, 0}), P({2, 0})}), Error);
}

TEST(VerifyHilbertGeodesic, TwoFaceConstruction) {
    // Forward hits on the top edge, backward hits on the bottom edge.
    std::vector<Point> line = {P({-0.2, -0.5}), P({0, 0.1}), P({0.3, 0.7})};
    EXPECT_TRUE(verify_hilbert_geodesic(gen::square(), line).is_geodesic);
    EXPECT_FALSE(verify_hilbert_geodesic(gen::unit_ball(2), line).is_geodesic);
}

TEST(UniqueGeodesicPair, ExposedHits) {
    EXPECT_TRUE(unique_geodesic_pair(gen::unit_ball(2), P({0.1, 0.2}), P({-0.3, 0.5})));
    EXPECT_FALSE(unique_geodesic_pair(gen::square(), P({0, 0}), P({0.5, 0.1})));
    EXPECT_TRUE(unique_geodesic_pair(gen::square(), P({0, 0}), P({0.5, 0.5})));
    EXPECT_THROW(unique_geodesic_pair(gen::half_plane(), P({0, 1}), P({1, 1})), Error);
}

}  // namespace
