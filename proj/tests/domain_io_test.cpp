#include "funk/domain_io.hpp"
#include "funk/metric_engine.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

namespace {

using namespace funk;

const std::string kData = FUNK_TEST_DATA;

// Message of the Parse error thrown for `text`, or "" when parsing succeeds.
std::string parse_error(const std::string& text) {
    try {
        parse_domain(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse) << e.what();
        return e.what();
    }
    return "";
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

TEST(LoadDomain, Fixtures) {
    ConvexDomain sq = load_domain(kData + "/square.json");
    ASSERT_NE(sq.polytope(), nullptr);
    EXPECT_EQ(sq.polytope()->constraints().size(), 4u);
    EXPECT_EQ(sq.polytope()->vertices().size(), 4u);

    ConvexDomain ball = load_domain(kData + "/ball.json");
    ASSERT_NE(ball.ball(), nullptr);
    EXPECT_EQ(ball.ball()->radius(), 1.0);

    ConvexDomain hp = load_domain(kData + "/half_plane.json");
    EXPECT_EQ(hp.base_point(), Eigen::Vector2d(0, 1));

    ConvexDomain cube = load_domain(kData + "/cube3.json");
    EXPECT_EQ(cube.dim(), 3);
}

TEST(LoadDomain, BadVertexPointsAtItsLine) {
    try {
        load_domain(kData + "/bad_vertex.json");
        FAIL() << "expected a parse error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_TRUE(starts_with(e.what(), "line 5:")) << e.what();
    }
}

TEST(LoadDomain, MissingFile) {
    EXPECT_THROW(load_domain(kData + "/no_such_file.json"), Error);
}

TEST(ParseDomain, NestedKinds) {
    ConvexDomain d = parse_domain(R"({"dim": 2, "kind": "intersection",
        "parts": [{"kind": "ball", "center": [0, 0], "radius": 1},
                  {"kind": "affine_image", "matrix": [[2, 0], [0, 1]], "translation": [0.5, 0],
                   "inner": {"kind": "hpolytope",
                             "constraints": [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]}}],
        "witness": [0, 0]})");
    EXPECT_EQ(d.kind(), ConvexDomain::Kind::Intersection);
    // The affine image is (-1.5, 2.5) x (-1, 1); the ball is the binding part.
    EXPECT_NEAR(contains(d, Eigen::Vector2d(0.5, 0)), 0.5, 1e-15);
}

TEST(ParseDomain, ErrorsCarryLineNumbers) {
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2,\n \"radius\": 1}"), "line 1:"));
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2, \"kind\": \"ball\",\n"
                                        " \"center\": [0, 0],\n"
                                        " \"radius\": -1}"),
                            "line 3:"));
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2, \"kind\": \"hpolytope\",\n"
                                        " \"constraints\": [[1, 0, 1],\n"
                                        "   [1, 1]]}"),
                            "line 3:"));
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2,\n \"kind\": \"prism\"}"), "line 2:"));
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 3, \"kind\": \"ball\",\n"
                                        " \"center\": [0, 0], \"radius\": 1}"),
                            "line 2:"));
}

TEST(ParseDomain, SyntaxErrorsAndTypeErrors) {
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2,\n \"kind\": \"ball\",,}"), "line 2:"));
    EXPECT_TRUE(starts_with(parse_error("{\"dim\": 2, \"kind\": \"ball\",\n"
                                        " \"center\": [0, \"x\"], \"radius\": 1}"),
                            "line 2:"));
    EXPECT_TRUE(starts_with(parse_error("[1, 2]"), "line 1:"));
}

TEST(ParseDomain, SingularAffineMapRejected) {
    std::string msg = parse_error(R"({"dim": 2, "kind": "affine_image",
        "matrix": [[1, 2], [2, 4]], "translation": [0, 0],
        "inner": {"kind": "ball", "center": [0, 0], "radius": 1}})");
    EXPECT_TRUE(starts_with(msg, "line 2:")) << msg;
}

TEST(ParseDomain, WitnessOutsideRejected) {
    std::string msg = parse_error(R"({"dim": 2, "kind": "hpolytope",
        "constraints": [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]],
        "witness": [3, 0]})");
    EXPECT_TRUE(starts_with(msg, "line 3:")) << msg;
}

}  // namespace
