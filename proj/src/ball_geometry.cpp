#include "funk/ball_geometry.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace funk {
namespace {

void check_ball_args(const ConvexDomain& domain, const Point& x, double rho) {
    if (x.size() != domain.dim()) fail(ErrorCode::DimensionMismatch, "ball center dimension");
    if (!(contains(domain, x) > 0.0)) fail(ErrorCode::NotInterior, "ball center is not interior");
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        fail(ErrorCode::InvalidArgument, "ball radius must be positive");
    }
}

constexpr std::array<int, 16> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                         23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

}  // namespace

MetricBall forward_ball(const ConvexDomain& domain, const Point& x, double rho) {
    check_ball_args(domain, x, rho);
    const double factor = -std::expm1(-rho);
    return {domain, x, rho, Orientation::Forward, homothety(domain, x, factor)};
}

MetricBall backward_ball(const ConvexDomain& domain, const Point& x, double rho) {
    check_ball_args(domain, x, rho);
    const double factor = -std::expm1(rho);
    ConvexDomain reflected = homothety(domain, x, factor);
    return {domain, x, rho, Orientation::Backward, intersection({domain, reflected}, x)};
}

bool in_ball(const MetricBall& ball, const Point& y) {
    return contains(ball.realized, y) > 0.0;
}

std::vector<Direction> sphere_directions(int dim, int k, std::uint64_t seed) {
    if (dim < 1) fail(ErrorCode::InvalidArgument, "direction dimension must be positive");
    if (k < 1) fail(ErrorCode::InvalidArgument, "need at least one direction");
    std::vector<Direction> out;
    out.reserve(k);
    if (dim == 1) {
        for (int i = 0; i < k; ++i) out.push_back(Direction::Constant(1, i % 2 == 0 ? 1.0 : -1.0));
        return out;
    }
    if (dim == 2) {
        for (int i = 0; i < k; ++i) {
            double angle = 2.0 * std::numbers::pi * i / k;
            Direction d(2);
            d << std::cos(angle), std::sin(angle);
            out.push_back(d);
        }
        return out;
    }
    if (dim > static_cast<int>(kPrimes.size())) {
        fail(ErrorCode::InvalidArgument, "sphere directions limited to dimension 16");
    }
    // Cranley-Patterson rotation of the Halton points keeps runs reproducible
    // per seed while avoiding the lattice artifacts of the raw sequence.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> shift(dim);
    for (auto& s : shift) s = unif(rng);
    std::uint64_t index = 1;
    while (static_cast<int>(out.size()) < k) {
        Direction d(dim);
        for (int i = 0; i < dim; ++i) {
            double u = radical_inverse(index, kPrimes[i]) + shift[i];
            u -= std::floor(u);
            u = std::clamp(u, 1e-12, 1.0 - 1e-12);
            d(i) = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
        }
        ++index;
        double norm = d.norm();
        if (norm < 1e-9) continue;
        out.push_back(d / norm);
    }
    return out;
}

std::vector<SpherePoint> sphere_sample(const MetricBall& ball, int k, std::uint64_t seed) {
    if (k < 3) fail(ErrorCode::InvalidArgument, "sphere sampling needs k >= 3");
    const Tolerances& tol = default_tolerances();
    std::vector<SpherePoint> out;
    out.reserve(k);
    for (const auto& d : sphere_directions(ball.center.size(), k, seed)) {
        Hit hit = ray_boundary(ball.realized, ball.center, ball.center + d);
        if (!hit.is_finite()) continue;
        bool on_sphere = true;
        if (ball.orientation == Orientation::Backward) {
            on_sphere = contains(ball.domain, hit.point()) > tol.face;
        }
        out.push_back({hit.point(), on_sphere});
    }
    return out;
}

SandwichConstants sandwich(const HPolytope& polytope, const Point& x) {
    if (!polytope.has_vertices()) fail(ErrorCode::InvalidArgument, "sandwich needs vertex data");
    if (x.size() != polytope.dim()) fail(ErrorCode::DimensionMismatch, "point dimension");
    if (!(polytope.margin(x) > 0.0)) fail(ErrorCode::NotInterior, "point is not interior");
    if (!polytope.is_bounded()) fail(ErrorCode::InvalidArgument, "sandwich needs a bounded polytope");
    double far = 0.0;
    for (const auto& v : polytope.vertices()) far = std::max(far, (v - x).norm());
    return {polytope.margin(x), far};
}

AffineMap ball_similarity(const MetricBall& from, const MetricBall& to) {
    if (from.orientation != Orientation::Forward || to.orientation != Orientation::Forward) {
        fail(ErrorCode::InvalidArgument, "similarity is defined for forward balls");
    }
    // B_i = x_i + l_i (domain - x_i). Pull back to the domain, push forward:
    // y -> x2 + l2 (x1 - x2) + (l2 / l1)(y - x1).
    const double l2 = -std::expm1(-to.radius);
    const double ratio = std::expm1(-to.radius) / std::expm1(-from.radius);
    const auto n = from.center.size();
    return AffineMap(ratio * Matrix::Identity(n, n),
                     to.center + l2 * (from.center - to.center) - ratio * from.center);
}

}  // namespace funk
