#include "funk/convex_core.hpp"

#include "funk/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <variant>

namespace funk {

struct ConvexDomain::Node {
    std::variant<HPolytope, EuclideanBall, AffineImageNode, IntersectionNode> body;
    Point base;
};

namespace {

void require_dim(const Vector& v, int n, const char* what) {
    if (v.size() != n) {
        std::ostringstream os;
        os << what << ": expected dimension " << n << ", got " << v.size();
        fail(ErrorCode::DimensionMismatch, os.str());
    }
}

Point chebyshev_center(const std::vector<Constraint>& constraints, int n,
                       const Tolerances& tol) {
    const int m = static_cast<int>(constraints.size());
    Matrix a(m + 1, n + 1);
    Vector b(m + 1);
    for (int j = 0; j < m; ++j) {
        a.row(j).head(n) = constraints[j].normal.transpose();
        a(j, n) = constraints[j].normal.norm();
        b(j) = constraints[j].bound;
    }
    a.row(m).setZero();
    a(m, n) = 1.0;
    b(m) = 1.0;
    Vector c = Vector::Zero(n + 1);
    c(n) = -1.0;
    auto res = lp::minimize(a, b, c);
    if (res.status != lp::Status::Optimal || res.x(n) <= tol.boundary) {
        fail(ErrorCode::Degenerate, "polytope has empty interior");
    }
    return res.x.head(n);
}

// Parameter of the exit point along x + t d, or +inf for a recession direction.
double exit_parameter(const ConvexDomain& domain, const Point& x, const Direction& d,
                      const Tolerances& tol);

double polytope_exit(const HPolytope& poly, const Point& x, const Direction& d,
                     const Tolerances& tol) {
    double best = std::numeric_limits<double>::infinity();
    const double dnorm = d.norm();
    for (const auto& c : poly.constraints()) {
        double rate = c.normal.dot(d);
        if (rate <= tol.direction * c.normal.norm() * dnorm) continue;
        best = std::min(best, c.slack(x) / rate);
    }
    return best;
}

double ball_exit(const EuclideanBall& ball, const Point& x, const Direction& d) {
    // |x + t d - c|^2 = r^2, positive root; c0 < 0 for interior x.
    Vector w = x - ball.center();
    double qa = d.squaredNorm();
    double qb = 2.0 * w.dot(d);
    double qc = w.squaredNorm() - ball.radius() * ball.radius();
    double disc = std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc));
    if (qb > 0.0) return 2.0 * qc / (-qb - disc);
    return (-qb + disc) / (2.0 * qa);
}

double exit_parameter(const ConvexDomain& domain, const Point& x, const Direction& d,
                      const Tolerances& tol) {
    switch (domain.kind()) {
        case ConvexDomain::Kind::Polytope:
            return polytope_exit(*domain.polytope(), x, d, tol);
        case ConvexDomain::Kind::Ball:
            return ball_exit(*domain.ball(), x, d);
        case ConvexDomain::Kind::AffineImage: {
            const auto& node = *domain.affine();
            return exit_parameter(node.inner, node.map.pull_back(x),
                                  node.map.pull_back_linear(d), tol);
        }
        case ConvexDomain::Kind::Intersection: {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& part : domain.intersection()->parts) {
                best = std::min(best, exit_parameter(part, x, d, tol));
            }
            return best;
        }
    }
    return std::numeric_limits<double>::infinity();
}

struct Candidate {
    Vector normal;
    bool strict = false;
};

void collect_support(const ConvexDomain& domain, const Point& a, const Tolerances& tol,
                     std::vector<Candidate>& out) {
    switch (domain.kind()) {
        case ConvexDomain::Kind::Polytope: {
            for (auto j : active_face(*domain.polytope(), a, tol)) {
                out.push_back({domain.polytope()->constraints()[j].normal, false});
            }
            return;
        }
        case ConvexDomain::Kind::Ball: {
            const auto& ball = *domain.ball();
            if (std::abs(ball.radius() - (a - ball.center()).norm()) <= tol.face) {
                out.push_back({a - ball.center(), true});
            }
            return;
        }
        case ConvexDomain::Kind::AffineImage: {
            const auto& node = *domain.affine();
            std::vector<Candidate> inner;
            collect_support(node.inner, node.map.pull_back(a), tol, inner);
            for (auto& c : inner) {
                out.push_back({node.map.inverse_matrix().transpose() * c.normal, c.strict});
            }
            return;
        }
        case ConvexDomain::Kind::Intersection: {
            for (const auto& part : domain.intersection()->parts) {
                if (std::abs(contains(part, a)) <= tol.face) collect_support(part, a, tol, out);
            }
            return;
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------

HPolytope::HPolytope(std::vector<Constraint> constraints, std::vector<Point> vertices,
                     std::optional<Point> witness, const Tolerances& tol)
    : constraints_(std::move(constraints)), vertices_(std::move(vertices)) {
    if (constraints_.empty()) fail(ErrorCode::InvalidArgument, "polytope needs constraints");
    const int n = static_cast<int>(constraints_.front().normal.size());
    if (n < 1) fail(ErrorCode::InvalidArgument, "polytope dimension must be >= 1");
    for (std::size_t j = 0; j < constraints_.size(); ++j) {
        const auto& c = constraints_[j];
        require_dim(c.normal, n, "constraint normal");
        if (!all_finite(c.normal) || !std::isfinite(c.bound)) {
            fail(ErrorCode::InvalidArgument, "constraint " + std::to_string(j) + " is not finite");
        }
        if (c.normal.norm() == 0.0) {
            fail(ErrorCode::InvalidArgument, "constraint " + std::to_string(j) + " has zero normal");
        }
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto& p = vertices_[v];
        require_dim(p, n, "vertex");
        bool active = false;
        for (const auto& c : constraints_) {
            double d = c.distance(p);
            if (d < -tol.face) {
                fail(ErrorCode::InvalidArgument,
                     "vertex " + std::to_string(v) + " violates a constraint");
            }
            if (d <= tol.face) active = true;
        }
        if (!active) {
            fail(ErrorCode::InvalidArgument,
                 "vertex " + std::to_string(v) + " lies on no constraint hyperplane");
        }
    }
    if (!vertices_.empty()) {
        for (std::size_t j = 0; j < constraints_.size(); ++j) {
            double closest = std::numeric_limits<double>::infinity();
            for (const auto& p : vertices_) closest = std::min(closest, constraints_[j].distance(p));
            if (closest > tol.face) {
                fail(ErrorCode::InvalidArgument,
                     "constraint " + std::to_string(j) + " is not supporting the vertex hull");
            }
        }
    }
    if (witness) {
        require_dim(*witness, n, "witness");
        base_ = *witness;
        if (margin(base_) <= tol.boundary) {
            fail(ErrorCode::NotInterior, "witness is not an interior point");
        }
        return;
    }
    if (!vertices_.empty()) {
        Point avg = Point::Zero(n);
        for (const auto& p : vertices_) avg += p;
        avg /= static_cast<double>(vertices_.size());
        if (margin(avg) > tol.boundary) {
            base_ = avg;
            return;
        }
    }
    base_ = chebyshev_center(constraints_, n, tol);
}

double HPolytope::margin(const Point& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : constraints_) m = std::min(m, c.distance(x));
    return m;
}

bool HPolytope::is_bounded() const {
    const int n = dim();
    const int m = static_cast<int>(constraints_.size());
    Matrix a(m, n);
    Vector b(m);
    for (int j = 0; j < m; ++j) {
        a.row(j) = constraints_[j].normal.transpose();
        b(j) = constraints_[j].bound;
    }
    for (int i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
            Vector c = Vector::Zero(n);
            c(i) = sign;
            if (lp::minimize(a, b, c).status != lp::Status::Optimal) return false;
        }
    }
    return true;
}

EuclideanBall::EuclideanBall(Point center, double radius)
    : center_(std::move(center)), radius_(radius) {
    if (center_.size() < 1 || !all_finite(center_)) {
        fail(ErrorCode::InvalidArgument, "ball center must be a finite point");
    }
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
        fail(ErrorCode::InvalidArgument, "ball radius must be positive");
    }
}

AffineMap::AffineMap(Matrix matrix, Vector translation, const Tolerances& tol)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() != translation_.size()) {
        fail(ErrorCode::DimensionMismatch, "affine map needs a square matrix matching the translation");
    }
    if (!matrix_.allFinite() || !all_finite(translation_)) {
        fail(ErrorCode::InvalidArgument, "affine map entries must be finite");
    }
    Eigen::JacobiSVD<Matrix> svd(matrix_);
    const auto& sv = svd.singularValues();
    sigma_min_ = sv(sv.size() - 1);
    if (sv(0) == 0.0 || sigma_min_ <= tol.determinant * sv(0)) {
        fail(ErrorCode::Singular, "affine map is singular");
    }
    inverse_ = matrix_.inverse();
}

AffineMap AffineMap::identity(int n) {
    return AffineMap(Matrix::Identity(n, n), Vector::Zero(n));
}

AffineMap AffineMap::homothety(const Point& center, double factor) {
    const auto n = center.size();
    return AffineMap(factor * Matrix::Identity(n, n), (1.0 - factor) * center);
}

AffineMap AffineMap::then(const AffineMap& outer) const {
    return AffineMap(outer.matrix_ * matrix_, outer.matrix_ * translation_ + outer.translation_);
}

AffineMap AffineMap::inverse() const { return AffineMap(inverse_, -inverse_ * translation_); }

// ---------------------------------------------------------------------------

ConvexDomain::ConvexDomain(HPolytope polytope) {
    Point base = polytope.base_point();
    node_ = std::make_shared<const Node>(Node{std::move(polytope), std::move(base)});
}

ConvexDomain::ConvexDomain(EuclideanBall ball) {
    Point base = ball.center();
    node_ = std::make_shared<const Node>(Node{std::move(ball), std::move(base)});
}

ConvexDomain::Kind ConvexDomain::kind() const {
    return static_cast<Kind>(node_->body.index());
}

int ConvexDomain::dim() const { return static_cast<int>(node_->base.size()); }

const Point& ConvexDomain::base_point() const { return node_->base; }

const HPolytope* ConvexDomain::polytope() const { return std::get_if<HPolytope>(&node_->body); }
const EuclideanBall* ConvexDomain::ball() const { return std::get_if<EuclideanBall>(&node_->body); }
const AffineImageNode* ConvexDomain::affine() const {
    return std::get_if<AffineImageNode>(&node_->body);
}
const IntersectionNode* ConvexDomain::intersection() const {
    return std::get_if<IntersectionNode>(&node_->body);
}

ConvexDomain affine_image(const ConvexDomain& domain, const AffineMap& map) {
    if (map.dim() != domain.dim()) {
        fail(ErrorCode::DimensionMismatch, "affine map and domain dimensions differ");
    }
    Point base = map.apply(domain.base_point());
    return ConvexDomain(std::make_shared<const ConvexDomain::Node>(
        ConvexDomain::Node{AffineImageNode{domain, map}, std::move(base)}));
}

ConvexDomain intersection(std::vector<ConvexDomain> parts, std::optional<Point> witness) {
    if (parts.empty()) fail(ErrorCode::InvalidArgument, "intersection needs at least one part");
    const int n = parts.front().dim();
    for (const auto& p : parts) {
        if (p.dim() != n) fail(ErrorCode::DimensionMismatch, "intersection parts differ in dimension");
    }
    auto interior_to_all = [&](const Point& x) {
        return std::all_of(parts.begin(), parts.end(),
                           [&](const ConvexDomain& p) { return contains(p, x) > 0.0; });
    };
    std::optional<Point> base;
    if (witness) {
        require_dim(*witness, n, "witness");
        if (!interior_to_all(*witness)) {
            fail(ErrorCode::NotInterior, "witness is not interior to every part");
        }
        base = *witness;
    } else {
        std::vector<Point> candidates;
        Point avg = Point::Zero(n);
        for (const auto& p : parts) {
            candidates.push_back(p.base_point());
            avg += p.base_point();
        }
        candidates.push_back(avg / static_cast<double>(parts.size()));
        // Prefer the candidate with the largest clearance.
        double best = 0.0;
        for (const auto& c : candidates) {
            double clearance = std::numeric_limits<double>::infinity();
            for (const auto& p : parts) clearance = std::min(clearance, contains(p, c));
            if (clearance > best) {
                best = clearance;
                base = c;
            }
        }
        if (!base) {
            if (auto poly = as_polytope(ConvexDomain(std::make_shared<const ConvexDomain::Node>(
                    ConvexDomain::Node{IntersectionNode{parts}, candidates.front()})))) {
                base = poly->base_point();
            } else {
                fail(ErrorCode::Degenerate,
                     "intersection has no known interior point; supply a witness");
            }
        }
    }
    return ConvexDomain(std::make_shared<const ConvexDomain::Node>(
        ConvexDomain::Node{IntersectionNode{std::move(parts)}, std::move(*base)}));
}

double contains(const ConvexDomain& domain, const Point& x) {
    require_dim(x, domain.dim(), "point");
    switch (domain.kind()) {
        case ConvexDomain::Kind::Polytope:
            return domain.polytope()->margin(x);
        case ConvexDomain::Kind::Ball: {
            const auto& b = *domain.ball();
            return b.radius() - (x - b.center()).norm();
        }
        case ConvexDomain::Kind::AffineImage: {
            const auto& node = *domain.affine();
            return contains(node.inner, node.map.pull_back(x)) * node.map.min_singular_value();
        }
        case ConvexDomain::Kind::Intersection: {
            double m = std::numeric_limits<double>::infinity();
            for (const auto& part : domain.intersection()->parts) m = std::min(m, contains(part, x));
            return m;
        }
    }
    return 0.0;
}

Hit ray_boundary(const ConvexDomain& domain, const Point& x, const Point& y,
                 const Tolerances& tol) {
    require_dim(x, domain.dim(), "ray origin");
    require_dim(y, domain.dim(), "ray target");
    if (!all_finite(x) || !all_finite(y)) fail(ErrorCode::InvalidArgument, "non-finite ray endpoint");
    if (!(contains(domain, x) > 0.0)) fail(ErrorCode::NotInterior, "ray origin is not interior");
    Direction d = y - x;
    if (d.norm() <= tol.point) fail(ErrorCode::Degenerate, "ray endpoints coincide");
    double t = exit_parameter(domain, x, d, tol);
    if (!std::isfinite(t)) return Hit::at_infinity(d);
    return Hit::finite(x + t * d, t);
}

SupportData support_normals(const ConvexDomain& domain, const Point& a, const Tolerances& tol) {
    require_dim(a, domain.dim(), "boundary point");
    if (std::abs(contains(domain, a)) > tol.face) {
        fail(ErrorCode::NotOnBoundary, "point is not on the boundary");
    }
    std::vector<Candidate> found;
    collect_support(domain, a, tol, found);
    SupportData out;
    for (auto& c : found) {
        out.strictly_convex = out.strictly_convex || c.strict;
        out.normals.push_back(std::move(c.normal));
    }
    return out;
}

LinearForm supporting_functional(const ConvexDomain& domain, const Point& a,
                                 const Tolerances& tol) {
    require_dim(a, domain.dim(), "boundary point");
    if (std::abs(contains(domain, a)) > tol.boundary) {
        fail(ErrorCode::NotOnBoundary, "point is not on the boundary");
    }
    const Point& base = domain.base_point();
    if (const auto* poly = domain.polytope()) {
        // h_j = (phi_j - phi_j(b)) / (s_j - phi_j(b)) is < 1 on the whole
        // polytope; the largest h_j(a) wins, first index on ties.
        std::size_t best = 0;
        double best_value = -std::numeric_limits<double>::infinity();
        const auto& cs = poly->constraints();
        for (std::size_t j = 0; j < cs.size(); ++j) {
            double value = (cs[j].value(a) - cs[j].value(base)) / cs[j].slack(base);
            if (value > best_value + tol.face) {
                best_value = value;
                best = j;
            }
        }
        const auto& c = cs[best];
        double scale = c.slack(base);
        return {c.normal / scale, -c.value(base) / scale};
    }
    std::vector<Candidate> found;
    collect_support(domain, a, tol, found);
    std::size_t best = found.size();
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < found.size(); ++k) {
        // Distance of a from the base along the unit normal: the piece whose
        // hyperplane is nearest (relative to a) bounds tightest.
        double value = found[k].normal.dot(a - base) / found[k].normal.norm();
        if (value > best_value + tol.face) {
            best_value = value;
            best = k;
        }
    }
    if (best == found.size() || best_value <= 0.0) {
        fail(ErrorCode::NotOnBoundary, "no active supporting piece");
    }
    const Vector& normal = found[best].normal;
    double denom = normal.dot(a - base);
    return {normal / denom, -normal.dot(base) / denom};
}

std::vector<std::size_t> active_face(const HPolytope& polytope, const Point& a,
                                     const Tolerances& tol) {
    require_dim(a, polytope.dim(), "boundary point");
    std::vector<std::size_t> out;
    const auto& cs = polytope.constraints();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (std::abs(cs[j].distance(a)) <= tol.face) out.push_back(j);
    }
    if (out.empty() || polytope.margin(a) < -tol.face) {
        fail(ErrorCode::NotOnBoundary, "point is not on the polytope boundary");
    }
    return out;
}

HPolytope transformed(const HPolytope& polytope, const AffineMap& map) {
    if (map.dim() != polytope.dim()) {
        fail(ErrorCode::DimensionMismatch, "affine map and polytope dimensions differ");
    }
    std::vector<Constraint> cs;
    cs.reserve(polytope.constraints().size());
    const Matrix inv_t = map.inverse_matrix().transpose();
    for (const auto& c : polytope.constraints()) {
        Vector normal = inv_t * c.normal;
        cs.push_back({normal, c.bound + normal.dot(map.translation())});
    }
    std::vector<Point> vertices;
    for (const auto& v : polytope.vertices()) vertices.push_back(map.apply(v));
    // Large distortions can push mapped vertices slightly outside the face
    // tolerance; keep the witness and rebuild without vertices in that case.
    try {
        return HPolytope(cs, vertices, map.apply(polytope.base_point()));
    } catch (const Error&) {
        return HPolytope(cs, {}, map.apply(polytope.base_point()));
    }
}

ConvexDomain homothety(const ConvexDomain& domain, const Point& center, double factor) {
    require_dim(center, domain.dim(), "homothety center");
    if (factor == 0.0 || !std::isfinite(factor)) {
        fail(ErrorCode::InvalidArgument, "homothety factor must be finite and nonzero");
    }
    auto map_point = [&](const Point& p) -> Point { return center + factor * (p - center); };
    switch (domain.kind()) {
        case ConvexDomain::Kind::Polytope: {
            const auto& poly = *domain.polytope();
            const double sign = factor > 0.0 ? 1.0 : -1.0;
            const double mag = std::abs(factor);
            std::vector<Constraint> cs;
            for (const auto& c : poly.constraints()) {
                // y = center + factor (z - center), <n,z> < s.
                cs.push_back({sign * c.normal, sign * c.value(center) + mag * c.slack(center)});
            }
            std::vector<Point> vertices;
            for (const auto& v : poly.vertices()) vertices.push_back(map_point(v));
            return HPolytope(std::move(cs), std::move(vertices), map_point(poly.base_point()));
        }
        case ConvexDomain::Kind::Ball: {
            const auto& b = *domain.ball();
            return EuclideanBall(map_point(b.center()), std::abs(factor) * b.radius());
        }
        case ConvexDomain::Kind::AffineImage: {
            const auto& node = *domain.affine();
            return affine_image(node.inner, node.map.then(AffineMap::homothety(center, factor)));
        }
        case ConvexDomain::Kind::Intersection: {
            std::vector<ConvexDomain> parts;
            for (const auto& p : domain.intersection()->parts) {
                parts.push_back(homothety(p, center, factor));
            }
            return intersection(std::move(parts), map_point(domain.base_point()));
        }
    }
    return domain;
}

std::optional<HPolytope> as_polytope(const ConvexDomain& domain) {
    switch (domain.kind()) {
        case ConvexDomain::Kind::Polytope:
            return *domain.polytope();
        case ConvexDomain::Kind::Ball:
            return std::nullopt;
        case ConvexDomain::Kind::AffineImage: {
            const auto& node = *domain.affine();
            auto inner = as_polytope(node.inner);
            if (!inner) return std::nullopt;
            return transformed(*inner, node.map);
        }
        case ConvexDomain::Kind::Intersection: {
            std::vector<Constraint> cs;
            for (const auto& p : domain.intersection()->parts) {
                auto poly = as_polytope(p);
                if (!poly) return std::nullopt;
                cs.insert(cs.end(), poly->constraints().begin(), poly->constraints().end());
            }
            const Point& base = domain.base_point();
            double clearance = std::numeric_limits<double>::infinity();
            for (const auto& c : cs) clearance = std::min(clearance, c.distance(base));
            if (clearance > 0.0) return HPolytope(std::move(cs), {}, base);
            return HPolytope(std::move(cs));
        }
    }
    return std::nullopt;
}

Hit Hit::finite(Point point, double t) {
    Hit h;
    h.finite_ = true;
    h.point_ = std::move(point);
    h.t_ = t;
    return h;
}

Hit Hit::at_infinity(Direction direction) {
    if (!(direction.norm() > 0.0)) fail(ErrorCode::InvalidArgument, "zero recession direction");
    Hit h;
    h.finite_ = false;
    h.direction_ = std::move(direction);
    return h;
}

const Point& Hit::point() const {
    if (!finite_) fail(ErrorCode::InvalidArgument, "hit is at infinity");
    return point_;
}

double Hit::t() const {
    if (!finite_) fail(ErrorCode::InvalidArgument, "hit is at infinity");
    return t_;
}

const Direction& Hit::direction() const {
    if (finite_) fail(ErrorCode::InvalidArgument, "hit is finite");
    return direction_;
}

ProjectivePoint to_projective(const Hit& hit) {
    Vector h;
    if (hit.is_finite()) {
        const auto& p = hit.point();
        h.resize(p.size() + 1);
        h.head(p.size()) = p;
        h(p.size()) = 1.0;
    } else {
        const auto& d = hit.direction();
        h.resize(d.size() + 1);
        h.head(d.size()) = d;
        h(d.size()) = 0.0;
    }
    return {h / h.norm()};
}

std::vector<Point> sample_interior(const ConvexDomain& domain, int count, std::mt19937_64& rng,
                                   double max_fraction) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, max_fraction);
    const Point& base = domain.base_point();
    const int n = domain.dim();
    std::vector<Point> out;
    out.reserve(count);
    Tolerances tol;
    while (static_cast<int>(out.size()) < count) {
        Direction d(n);
        for (int i = 0; i < n; ++i) d(i) = gauss(rng);
        if (d.norm() < 1e-12) continue;
        d /= d.norm();
        double reach = exit_parameter(domain, base, d, tol);
        if (!std::isfinite(reach)) reach = 10.0;
        Point p = base + unif(rng) * reach * d;
        if (contains(domain, p) > 0.0) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace funk
