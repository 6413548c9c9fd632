#include "funk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace funk::gen {
namespace {

// Facet through `points` (n of them in R^n), oriented so `inside` satisfies it.
Constraint facet(const std::vector<Point>& points, const Point& inside) {
    const int n = static_cast<int>(points.front().size());
    Matrix diffs(n - 1 > 0 ? n - 1 : 1, n);
    if (n == 1) {
        diffs.setZero();
    } else {
        for (int k = 1; k < n; ++k) diffs.row(k - 1) = (points[k] - points[0]).transpose();
    }
    Eigen::JacobiSVD<Matrix> svd(diffs, Eigen::ComputeFullV);
    Vector normal = svd.matrixV().col(n - 1);
    double bound = normal.dot(points[0]);
    if (normal.dot(inside) > bound) {
        normal = -normal;
        bound = -bound;
    }
    return {normal, bound};
}

HPolytope polygon_from_vertices(const std::vector<Point>& vertices) {
    Point centroid = Point::Zero(2);
    for (const auto& v : vertices) centroid += v;
    centroid /= static_cast<double>(vertices.size());
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        cs.push_back(facet({p, q}, centroid));
    }
    return HPolytope(std::move(cs), vertices);
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Direction gaussian_direction(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Direction d(n);
    do {
        for (int i = 0; i < n; ++i) d(i) = g(rng);
    } while (d.norm() < 1e-6);
    return d.normalized();
}

Point uniform_in_ball(Rng& rng, int n, double radius) {
    return gaussian_direction(rng, n) * radius * std::pow(uniform(rng, 0.0, 1.0), 1.0 / n);
}

HPolytope square() { return cube(2); }

HPolytope cube(int n) {
    std::vector<Constraint> cs;
    for (int i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
            Vector normal = Vector::Zero(n);
            normal(i) = sign;
            cs.push_back({normal, 1.0});
        }
    }
    std::vector<Point> vertices;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Point v(n);
        for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1 ? 1.0 : -1.0;
        vertices.push_back(v);
    }
    return HPolytope(std::move(cs), std::move(vertices));
}

EuclideanBall unit_ball(int n) { return EuclideanBall(Point::Zero(n), 1.0); }

HPolytope half_plane() {
    Vector normal(2);
    normal << 0.0, -1.0;
    Point witness(2);
    witness << 0.0, 1.0;
    return HPolytope({{normal, 0.0}}, {}, witness);
}

HPolytope orthant(int n) {
    std::vector<Constraint> cs;
    for (int i = 0; i < n; ++i) {
        Vector normal = Vector::Zero(n);
        normal(i) = -1.0;
        cs.push_back({normal, 0.0});
    }
    return HPolytope(std::move(cs), {}, Point::Ones(n));
}

HPolytope regular_polygon(int k, double r) {
    std::vector<Point> vertices;
    for (int i = 0; i < k; ++i) {
        double angle = 2.0 * std::numbers::pi * i / k;
        Point v(2);
        v << r * std::cos(angle), r * std::sin(angle);
        vertices.push_back(v);
    }
    return polygon_from_vertices(vertices);
}

HPolytope random_polygon(Rng& rng, int k) {
    for (;;) {
        std::vector<double> angles(k);
        for (auto& a : angles) a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        std::sort(angles.begin(), angles.end());
        double max_gap = 2.0 * std::numbers::pi - angles.back() + angles.front();
        double min_gap = max_gap;
        for (int i = 1; i < k; ++i) {
            max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
            min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        }
        if (max_gap > 0.9 * std::numbers::pi || min_gap < 0.05) continue;
        const double sx = uniform(rng, 0.6, 1.5);
        const double sy = uniform(rng, 0.6, 1.5);
        const double shear = uniform(rng, -0.3, 0.3);
        Point shift(2);
        shift << uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5);
        std::vector<Point> vertices;
        for (double a : angles) {
            Point v(2);
            v << sx * std::cos(a) + shear * std::sin(a), sy * std::sin(a);
            vertices.push_back(v + shift);
        }
        return polygon_from_vertices(vertices);
    }
}

HPolytope random_simplex(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        std::vector<Point> vertices(n + 1, Point(n));
        for (auto& v : vertices) {
            for (int i = 0; i < n; ++i) v(i) = g(rng);
        }
        Matrix edges(n, n);
        for (int k = 0; k < n; ++k) edges.col(k) = vertices[k + 1] - vertices[0];
        Eigen::JacobiSVD<Matrix> svd(edges);
        const auto& sv = svd.singularValues();
        if (sv(n - 1) < 0.3 * sv(0)) continue;
        Point centroid = Point::Zero(n);
        for (const auto& v : vertices) centroid += v;
        centroid /= static_cast<double>(n + 1);
        std::vector<Constraint> cs;
        for (int skip = 0; skip <= n; ++skip) {
            std::vector<Point> others;
            for (int k = 0; k <= n; ++k) {
                if (k != skip) others.push_back(vertices[k]);
            }
            cs.push_back(facet(others, centroid));
        }
        return HPolytope(std::move(cs), std::move(vertices));
    }
}

HPolytope random_polytope(Rng& rng, int n, int extra) {
    std::vector<Constraint> cs;
    for (int i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
            Vector normal = Vector::Zero(n);
            normal(i) = sign;
            cs.push_back({normal, uniform(rng, 1.0, 2.0)});
        }
    }
    for (int k = 0; k < extra; ++k) {
        cs.push_back({gaussian_direction(rng, n), uniform(rng, 0.5, 1.5)});
    }
    std::shuffle(cs.begin(), cs.end(), rng);
    return HPolytope(std::move(cs), {}, Point::Zero(n));
}

HPolytope random_bounded(Rng& rng, int n) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            if (n == 2) return random_polygon(rng, std::uniform_int_distribution<int>(3, 9)(rng));
            return random_simplex(rng, n);
        case 1:
            return random_simplex(rng, n);
        default:
            return random_polytope(rng, n, std::uniform_int_distribution<int>(1, 2 * n)(rng));
    }
}

AffineMap random_affine(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto orthogonal = [&]() {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = g(rng);
        }
        Eigen::HouseholderQR<Matrix> qr(m);
        return Matrix(qr.householderQ());
    };
    Vector sigma(n);
    for (int i = 0; i < n; ++i) sigma(i) = uniform(rng, 0.5, 2.0);
    Matrix a = orthogonal() * sigma.asDiagonal() * orthogonal();
    Vector t(n);
    for (int i = 0; i < n; ++i) t(i) = uniform(rng, -1.0, 1.0);
    return AffineMap(a, t);
}

Point interior_point(const ConvexDomain& domain, Rng& rng, double fraction) {
    return sample_interior(domain, 1, rng, fraction).front();
}

ProjectiveMap::ProjectiveMap(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2) {
        fail(ErrorCode::DimensionMismatch, "projective map needs a square matrix of size >= 2");
    }
    Eigen::JacobiSVD<Matrix> svd(m_);
    const auto& sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-12 * sv(0))) fail(ErrorCode::Singular, "singular projective map");
}

double ProjectiveMap::denominator(const Point& x) const {
    const int n = dim();
    return m_.row(n).head(n).dot(x) + m_(n, n);
}

Point ProjectiveMap::apply(const Point& x) const {
    const int n = dim();
    Vector h(n + 1);
    h.head(n) = x;
    h(n) = 1.0;
    Vector img = m_ * h;
    if (!(img(n) > 0.0)) fail(ErrorCode::Degenerate, "point mapped to or beyond infinity");
    return img.head(n) / img(n);
}

ProjectiveMap random_admissible_projective(Rng& rng, const HPolytope& polytope) {
    if (!polytope.has_vertices()) fail(ErrorCode::InvalidArgument, "need vertex data");
    const int n = polytope.dim();
    double reach = 0.0;
    for (const auto& v : polytope.vertices()) reach = std::max(reach, v.norm());
    for (;;) {
        AffineMap a = random_affine(rng, n);
        Matrix m = Matrix::Zero(n + 1, n + 1);
        m.topLeftCorner(n, n) = a.matrix();
        m.col(n).head(n) = a.translation();
        // |c . v| <= 0.45 on the vertices keeps the denominator above 1/2.
        Vector c = gaussian_direction(rng, n) * uniform(rng, 0.0, 0.45) / reach;
        m.row(n).head(n) = c.transpose();
        m(n, n) = 1.0;
        ProjectiveMap map(m);
        bool ok = std::all_of(polytope.vertices().begin(), polytope.vertices().end(),
                              [&](const Point& v) { return map.denominator(v) > 0.5; });
        if (ok) return map;
    }
}

HPolytope transformed(const HPolytope& polytope, const ProjectiveMap& map) {
    const int n = polytope.dim();
    const Matrix inv = map.matrix().inverse();
    std::vector<Constraint> cs;
    for (const auto& c : polytope.constraints()) {
        // s - <phi, x> > 0 as a row on homogeneous coordinates, pulled back.
        Vector row(n + 1);
        row.head(n) = -c.normal;
        row(n) = c.bound;
        Vector w = inv.transpose() * row;
        Vector normal = -w.head(n);
        double scale = normal.norm();
        cs.push_back({normal / scale, w(n) / scale});
    }
    std::vector<Point> vertices;
    for (const auto& v : polytope.vertices()) vertices.push_back(map.apply(v));
    return HPolytope(std::move(cs), std::move(vertices), map.apply(polytope.base_point()));
}

}  // namespace funk::gen
