#include "funk/cli.hpp"

#include "funk/ball_geometry.hpp"
#include "funk/checks.hpp"
#include "funk/domain_io.hpp"
#include "funk/finsler_tangent.hpp"
#include "funk/geodesy.hpp"
#include "funk/metric_engine.hpp"
#include "funk/projection.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace funk::cli {

std::string format_number(double v) {
    if (v == 0.0) return "0.000000000000";
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

namespace {

using json = nlohmann::json;

// Coordinates below this size are rounding residue of trigonometric
// directions and print as zero.
constexpr double kCoordinateNoise = 1e-14;
constexpr double kPixelsPerUnit = 100.0;
constexpr int kOutlineSamples = 256;

std::string coord(double v) { return format_number(std::abs(v) < kCoordinateNoise ? 0.0 : v); }

std::string point_text(const Point& p) {
    std::string s = "(";
    for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? ", " : "") + coord(p(i));
    return s + ")";
}

std::string point_csv(const Point& p) {
    std::string s;
    for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + coord(p(i));
    return s;
}

// JSON values are written by hand so that every number keeps the fixed
// 12-digit form.
std::string point_json(const Point& p) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? ", " : "") + coord(p(i));
    return s + "]";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

Point parse_point(const std::string& text, int dim) {
    std::string cleaned;
    for (char c : text) cleaned += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<double> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || !std::isfinite(v)) {
            fail(ErrorCode::Parse, "point '" + text + "': '" + token + "' is not a number");
        }
        values.push_back(v);
    }
    if (static_cast<int>(values.size()) != dim) {
        fail(ErrorCode::DimensionMismatch, "point '" + text + "' has " +
                                               std::to_string(values.size()) +
                                               " coordinates, the domain has " +
                                               std::to_string(dim));
    }
    return Eigen::Map<Vector>(values.data(), dim);
}

struct Settings {
    std::uint64_t seed = 0;
    std::vector<std::string> tol_overrides;
    std::string format;
    std::string out_file;
    Tolerances tol;
};

void apply_overrides(Settings& s) {
    for (const auto& kv : s.tol_overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            fail(ErrorCode::InvalidArgument, "--tol expects KEY=VAL, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(kv.substr(eq + 1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != kv.size() - eq - 1) {
            fail(ErrorCode::InvalidArgument, "--tol value for '" + key + "' is not a number");
        }
        if (!(value >= std::numeric_limits<double>::epsilon()) || !std::isfinite(value)) {
            fail(ErrorCode::InvalidArgument,
                 "--tol " + key + " must be at least machine epsilon");
        }
        if (!s.tol.set(key, value)) {
            fail(ErrorCode::InvalidArgument, "--tol: unknown tolerance '" + key + "'");
        }
    }
}

std::string hit_text(const std::string& label, const std::optional<Hit>& hit) {
    if (!hit) return label + " none";
    if (!hit->is_finite()) return label + " at infinity, direction " + point_text(hit->direction());
    return label + " " + point_text(hit->point()) + " t=" + format_number(hit->t());
}

std::string hit_json(const std::string& label, const std::optional<Hit>& hit) {
    std::string s = "{\"label\": " + quoted(label);
    if (!hit) return s + ", \"kind\": \"none\"}";
    if (!hit->is_finite()) {
        return s + ", \"kind\": \"infinity\", \"direction\": " + point_json(hit->direction()) +
               "}";
    }
    return s + ", \"kind\": \"finite\", \"point\": " + point_json(hit->point()) +
           ", \"t\": " + format_number(hit->t()) + "}";
}

// --- dist ------------------------------------------------------------------

struct DistArgs {
    std::string domain_file, metric, x, y, u_file;
};

int cmd_dist(const DistArgs& a, const Settings& s, std::ostream& out) {
    ConvexDomain dom = load_domain(a.domain_file, s.tol);
    Point x = parse_point(a.x, dom.dim());
    Point y = parse_point(a.y, dom.dim());
    std::vector<std::pair<std::string, std::optional<Hit>>> hits;
    double value = 0.0;
    if (a.metric == "funk") {
        auto d = funk_detail(dom, x, y, s.tol);
        value = d.value;
        hits.push_back({"a(x,y)", d.hit});
    } else if (a.metric == "rfunk") {
        auto d = funk_detail(dom, y, x, s.tol);
        value = d.value;
        hits.push_back({"a(y,x)", d.hit});
    } else if (a.metric == "hilbert" || a.metric == "maxsym") {
        auto f = funk_detail(dom, x, y, s.tol);
        auto r = funk_detail(dom, y, x, s.tol);
        value = a.metric == "hilbert" ? hilbert(dom, x, y, s.tol).value()
                                      : max_symmetrized(dom, x, y, s.tol).value();
        hits.push_back({"a(x,y)", f.hit});
        hits.push_back({"a(y,x)", r.hit});
    } else if (a.metric == "relfunk") {
        std::optional<ConvexDomain> u;
        if (!a.u_file.empty()) u = load_domain(a.u_file, s.tol);
        RelativeFunk rel(dom, u, 1000, s.tol);
        value = rel(x, y);
        hits.push_back({"a(x,y)", funk_detail(dom, x, y, s.tol).hit});
        if (u) hits.push_back({"entry of U", funk_detail(*u, y, x, s.tol).hit});
    } else {
        fail(ErrorCode::InvalidArgument, "unknown metric '" + a.metric + "'");
    }

    if (s.format == "json") {
        out << "{\"seed\": " << s.seed << ", \"metric\": " << quoted(a.metric)
            << ", \"x\": " << point_json(x) << ", \"y\": " << point_json(y)
            << ", \"value\": " << format_number(value) << ", \"hits\": [";
        for (std::size_t i = 0; i < hits.size(); ++i) {
            out << (i ? ", " : "") << hit_json(hits[i].first, hits[i].second);
        }
        out << "]}\n";
    } else if (s.format == "csv") {
        out << "# seed=" << s.seed << "\nmetric,value\n"
            << a.metric << "," << format_number(value) << "\n";
    } else {
        out << format_number(value) << "\n";
        for (const auto& [label, hit] : hits) out << hit_text(label, hit) << "\n";
    }
    return kOk;
}

// --- svg -------------------------------------------------------------------

// Boundary polygon of a planar domain: exact corners for polytopes, 256
// ray-cast samples otherwise. Rays that never leave are cut at `reach`.
std::vector<Point> outline(const ConvexDomain& dom, const Point& from, double reach) {
    if (auto poly = as_polytope(dom); poly && poly->is_bounded()) {
        const auto& cs = poly->constraints();
        std::vector<Point> corners;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                Matrix m(2, 2);
                m << cs[i].normal.transpose(), cs[j].normal.transpose();
                if (std::abs(m.determinant()) < 1e-12 * m.norm() * m.norm()) continue;
                Point p = m.partialPivLu().solve(Vector(Eigen::Vector2d(cs[i].bound, cs[j].bound)));
                if (poly->margin(p) < -1e-9) continue;
                bool fresh = std::none_of(corners.begin(), corners.end(), [&](const Point& q) {
                    return (q - p).norm() < 1e-9;
                });
                if (fresh) corners.push_back(p);
            }
        }
        Point c = Point::Zero(2);
        for (const auto& p : corners) c += p;
        c /= static_cast<double>(corners.size());
        std::sort(corners.begin(), corners.end(), [&](const Point& p, const Point& q) {
            return std::atan2(p(1) - c(1), p(0) - c(0)) < std::atan2(q(1) - c(1), q(0) - c(0));
        });
        return corners;
    }
    std::vector<Point> pts;
    for (int i = 0; i < kOutlineSamples; ++i) {
        double angle = 2.0 * std::numbers::pi * i / kOutlineSamples;
        Direction d(2);
        d << std::cos(angle), std::sin(angle);
        Hit h = ray_boundary(dom, from, from + d);
        pts.push_back(h.is_finite() && h.t() <= reach ? h.point() : Point(from + reach * d));
    }
    return pts;
}

struct Viewport {
    double xmin, ymax, width, height;
};

Viewport fit(const std::vector<std::vector<Point>>& groups) {
    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
    for (const auto& g : groups) {
        for (const auto& p : g) {
            xmin = std::min(xmin, p(0));
            xmax = std::max(xmax, p(0));
            ymin = std::min(ymin, p(1));
            ymax = std::max(ymax, p(1));
        }
    }
    const double pad = 0.1;
    return {xmin - pad, ymax + pad, xmax - xmin + 2 * pad, ymax - ymin + 2 * pad};
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
    return buf;
}

std::string svg_path(const std::vector<Point>& pts, const Viewport& vp) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += (i ? " L " : "M ") + px((pts[i](0) - vp.xmin) * kPixelsPerUnit) + " " +
             px((vp.ymax - pts[i](1)) * kPixelsPerUnit);
    }
    return d + " Z";
}

void write_svg(std::ostream& out, const Settings& s, const std::vector<Point>& domain_outline,
               const std::vector<Point>& ball_outline, const std::vector<SpherePoint>& samples) {
    std::vector<Point> sample_points;
    for (const auto& p : samples) sample_points.push_back(p.point);
    Viewport vp = fit({domain_outline, ball_outline, sample_points});
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- seed=" << s.seed << " -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << px(vp.width * kPixelsPerUnit) << "\" height=\"" << px(vp.height * kPixelsPerUnit)
        << "\" viewBox=\"0 0 " << px(vp.width * kPixelsPerUnit) << " "
        << px(vp.height * kPixelsPerUnit) << "\">\n"
        << "  <path d=\"" << svg_path(domain_outline, vp)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
        << "  <path d=\"" << svg_path(ball_outline, vp)
        << "\" fill=\"none\" stroke=\"blue\" stroke-width=\"1\"/>\n";
    for (const auto& p : samples) {
        out << "  <circle cx=\"" << px((p.point(0) - vp.xmin) * kPixelsPerUnit) << "\" cy=\""
            << px((vp.ymax - p.point(1)) * kPixelsPerUnit) << "\" r=\"2\" fill=\""
            << (p.on_sphere ? "red" : "gray") << "\"/>\n";
    }
    out << "</svg>\n";
}

// --- ball ------------------------------------------------------------------

struct BallArgs {
    std::string domain_file, x;
    double rho = 0.0;
    bool backward = false;
    int k = 64;
};

int cmd_ball(const BallArgs& a, const Settings& s, std::ostream& out) {
    ConvexDomain dom = load_domain(a.domain_file, s.tol);
    Point x = parse_point(a.x, dom.dim());
    MetricBall ball = a.backward ? backward_ball(dom, x, a.rho) : forward_ball(dom, x, a.rho);
    auto samples = sphere_sample(ball, a.k, s.seed);
    const char* orientation = a.backward ? "backward" : "forward";

    if (s.format == "svg") {
        if (dom.dim() != 2) fail(ErrorCode::InvalidArgument, "svg output needs a planar domain");
        double reach = 10.0;
        write_svg(out, s, outline(dom, dom.base_point(), reach), outline(ball.realized, x, reach),
                  samples);
    } else if (s.format == "json") {
        out << "{\"seed\": " << s.seed << ", \"orientation\": \"" << orientation
            << "\", \"center\": " << point_json(x) << ", \"rho\": " << format_number(a.rho)
            << ", \"samples\": [";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out << (i ? ", " : "") << "{\"point\": " << point_json(samples[i].point)
                << ", \"on_sphere\": " << (samples[i].on_sphere ? "true" : "false") << "}";
        }
        out << "]}\n";
    } else {
        out << "# seed=" << s.seed << "\n# " << orientation << " ball center="
            << point_csv(x) << " rho=" << format_number(a.rho) << "\n";
        for (int i = 0; i < dom.dim(); ++i) out << "x" << i + 1 << ",";
        out << "on_sphere\n";
        for (const auto& p : samples) out << point_csv(p.point) << "," << p.on_sphere << "\n";
    }
    return kOk;
}

// --- geodesic verify -------------------------------------------------------

struct GeodesicArgs {
    std::string domain_file;
    std::vector<std::string> points;
    bool hilbert = false;
};

int cmd_geodesic(const GeodesicArgs& a, const Settings& s, std::ostream& out) {
    ConvexDomain dom = load_domain(a.domain_file, s.tol);
    std::vector<Point> line;
    for (const auto& p : a.points) line.push_back(parse_point(p, dom.dim()));
    if (line.size() < 2) fail(ErrorCode::InvalidArgument, "a polyline needs at least 2 points");
    for (const auto& p : line) {
        if (!(contains(dom, p) > 0.0)) fail(ErrorCode::NotInterior, point_text(p) + " is not interior");
    }
    GeodesicCheck g = a.hilbert ? verify_hilbert_geodesic(dom, line, s.tol)
                                : verify_geodesic(dom, line, s.tol);
    std::optional<std::vector<std::size_t>> face, back_face;
    if (const HPolytope* poly = dom.polytope()) {
        face = common_face(*poly, line, false, s.tol);
        if (a.hilbert) back_face = common_face(*poly, line, true, s.tol);
    }
    auto list = [](const std::vector<std::size_t>& v) {
        std::string t = "[";
        for (std::size_t i = 0; i < v.size(); ++i) t += (i ? ", " : "") + std::to_string(v[i]);
        return t + "]";
    };
    if (s.format == "json") {
        out << "{\"seed\": " << s.seed << ", \"metric\": \"" << (a.hilbert ? "hilbert" : "funk")
            << "\", \"is_geodesic\": " << (g.is_geodesic ? "true" : "false")
            << ", \"defect\": " << format_number(g.defect);
        if (face) out << ", \"common_face\": " << list(*face);
        if (back_face) out << ", \"common_face_backward\": " << list(*back_face);
        out << "}\n";
    } else if (s.format == "csv") {
        out << "# seed=" << s.seed << "\nis_geodesic,defect\n"
            << g.is_geodesic << "," << format_number(g.defect) << "\n";
    } else {
        out << (g.is_geodesic ? "geodesic" : "not geodesic") << "\n"
            << "defect " << format_number(g.defect) << "\n";
        if (face) out << "common face " << list(*face) << "\n";
        if (back_face) out << "common face backward " << list(*back_face) << "\n";
    }
    return g.is_geodesic ? kOk : kInvariantFailure;
}

// --- project ---------------------------------------------------------------

struct ProjectArgs {
    std::string domain_file, x, set_file;
    std::vector<std::string> segment;
};

int cmd_project(const ProjectArgs& a, const Settings& s, std::ostream& out) {
    ConvexDomain dom = load_domain(a.domain_file, s.tol);
    Point x = parse_point(a.x, dom.dim());
    Foot foot;
    bool certified = true;
    if (!a.segment.empty()) {
        if (a.segment.size() != 2) fail(ErrorCode::InvalidArgument, "--segment takes two points");
        Point p = parse_point(a.segment[0], dom.dim());
        Point q = parse_point(a.segment[1], dom.dim());
        foot = nearest_on_segment(dom, x, {p, q}, 0.5, s.tol);
    } else if (!a.set_file.empty()) {
        auto poly = as_polytope(dom);
        if (!poly) fail(ErrorCode::InvalidArgument, "projection onto a set needs a polytope domain");
        ConvexDomain set_dom = load_domain(a.set_file, s.tol);
        auto set = as_polytope(set_dom);
        if (!set) fail(ErrorCode::InvalidArgument, "the set must be a polytope");
        foot = nearest_on_convex(*poly, x, closure(*set), s.tol);
        certified = foot_certificate(*poly, x, foot.point, closure(*set), s.tol);
    } else {
        fail(ErrorCode::InvalidArgument, "give --segment P Q or --set FILE");
    }
    if (s.format == "json") {
        out << "{\"seed\": " << s.seed << ", \"foot\": " << point_json(foot.point)
            << ", \"distance\": " << format_number(foot.distance);
        if (!a.segment.empty()) out << ", \"parameter\": " << format_number(foot.parameter);
        if (foot.certificate) {
            out << ", \"certificate\": {\"coeffs\": " << point_json(foot.certificate->coeffs)
                << ", \"offset\": " << format_number(foot.certificate->offset) << "}";
        }
        out << ", \"certified\": " << (certified ? "true" : "false") << "}\n";
    } else if (s.format == "csv") {
        out << "# seed=" << s.seed << "\n";
        for (int i = 0; i < dom.dim(); ++i) out << "y" << i + 1 << ",";
        out << "distance\n" << point_csv(foot.point) << "," << format_number(foot.distance) << "\n";
    } else {
        out << "foot " << point_text(foot.point) << "\n"
            << "distance " << format_number(foot.distance) << "\n";
        if (!a.segment.empty()) out << "parameter " << format_number(foot.parameter) << "\n";
        if (foot.certificate) {
            out << "certificate " << point_text(foot.certificate->coeffs) << " offset "
                << format_number(foot.certificate->offset) << "\n";
        }
        if (!a.set_file.empty()) out << (certified ? "certified" : "not certified") << "\n";
    }
    return certified ? kOk : kInvariantFailure;
}

// --- tangent ---------------------------------------------------------------

struct TangentArgs {
    std::string domain_file, p, v, x, y;
    std::vector<double> t_list = {1e-2, 1e-3, 1e-4, 1e-5};
};

int cmd_tangent(const TangentArgs& a, const Settings& s, std::ostream& out) {
    ConvexDomain dom = load_domain(a.domain_file, s.tol);
    Point p = parse_point(a.p, dom.dim());
    if (a.x.empty() != a.y.empty()) fail(ErrorCode::InvalidArgument, "--x and --y go together");
    if (a.x.empty()) {
        Direction v = parse_point(a.v, dom.dim());
        double n = tangent_norm(dom, p, v, s.tol);
        if (s.format == "json") {
            out << "{\"seed\": " << s.seed << ", \"norm\": " << format_number(n) << "}\n";
        } else if (s.format == "csv") {
            out << "# seed=" << s.seed << "\nnorm\n" << format_number(n) << "\n";
        } else {
            out << format_number(n) << "\n";
        }
        return kOk;
    }
    Point x = parse_point(a.x, dom.dim());
    Point y = parse_point(a.y, dom.dim());
    DifferenceReport r = finite_difference_check(dom, p, x, y, a.t_list, s.tol);
    if (s.format == "json") {
        out << "{\"seed\": " << s.seed << ", \"limit\": " << format_number(r.limit)
            << ", \"slope\": " << format_number(r.slope) << ", \"fitted_c\": "
            << format_number(r.fitted_c) << ", \"rows\": [";
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            out << (i ? ", " : "") << "{\"t\": " << format_number(r.rows[i].t)
                << ", \"quotient\": " << format_number(r.rows[i].quotient)
                << ", \"error\": " << format_number(r.rows[i].error) << "}";
        }
        out << "]}\n";
    } else {
        out << "# seed=" << s.seed << "\n# limit=" << format_number(r.limit)
            << " slope=" << format_number(r.slope) << " C=" << format_number(r.fitted_c)
            << "\nt,quotient,error\n";
        for (const auto& row : r.rows) {
            out << format_number(row.t) << "," << format_number(row.quotient) << ","
                << format_number(row.error) << "\n";
        }
    }
    return kOk;
}

// --- suite -----------------------------------------------------------------

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string tolerances_json(const Tolerances& t) {
    const std::pair<const char*, double> fields[] = {
        {"boundary", t.boundary},   {"direction", t.direction}, {"face", t.face},
        {"geometry", t.geometry},   {"determinant", t.determinant}, {"point", t.point},
        {"rank", t.rank},           {"align_defect", t.align_defect},
        {"geodesic", t.geodesic},   {"parallel", t.parallel},   {"line", t.line},
        {"area", t.area},           {"zero_clamp", t.zero_clamp}};
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
        s += std::string(first ? "" : ", ") + quoted(k) + ": " + format_number(v);
        first = false;
    }
    return s + "}";
}

int cmd_suite(const std::string& name, double scale, const Settings& s, std::ostream& out) {
    if (!checks::is_suite(name)) {
        std::string known;
        for (const auto& n : checks::suite_names()) known += " " + n;
        fail(ErrorCode::InvalidArgument, "unknown suite '" + name + "'; known:" + known);
    }
    if (!(scale > 0.0)) fail(ErrorCode::InvalidArgument, "--scale must be positive");
    auto start = std::chrono::steady_clock::now();
    auto results = checks::run_suite(name, s.seed, scale);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });

    if (s.format == "csv") {
        out << "# seed=" << s.seed << "\nname,pass,count,worst,threshold\n";
        for (const auto& r : results) {
            out << r.name << "," << r.pass << "," << r.count << "," << format_number(r.worst)
                << "," << format_number(r.threshold) << "\n";
        }
    } else {
        // Everything that varies between runs sits on the "run" line.
        std::string seconds;
        for (std::size_t i = 0; i < results.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%.3f", i ? ", " : "", results[i].seconds);
            seconds += buf;
        }
        char wall_buf[32];
        std::snprintf(wall_buf, sizeof wall_buf, "%.3f", wall);
        out << "{\n"
            << "\"run\": {\"timestamp\": \"" << utc_timestamp() << "\", \"wall_seconds\": "
            << wall_buf << ", \"check_seconds\": [" << seconds << "]},\n"
            << "\"suite\": " << quoted(name) << ",\n"
            << "\"seed\": " << s.seed << ",\n"
            << "\"scale\": " << format_number(scale) << ",\n"
            << "\"tolerances\": " << tolerances_json(s.tol) << ",\n"
            << "\"pass\": " << (pass ? "true" : "false") << ",\n"
            << "\"checks\": [\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            out << "  {\"name\": " << quoted(r.name) << ", \"pass\": "
                << (r.pass ? "true" : "false") << ", \"count\": " << r.count
                << ", \"worst\": " << format_number(r.worst)
                << ", \"threshold\": " << format_number(r.threshold)
                << ", \"note\": " << quoted(r.note) << "}" << (i + 1 < results.size() ? "," : "")
                << "\n";
        }
        out << "]\n}\n";
    }
    return pass ? kOk : kInvariantFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Funk, reverse Funk and Hilbert geometry of convex domains", "funk_cli"};
    app.require_subcommand(1);
    Settings settings;
    app.add_option("--seed", settings.seed, "Seed recorded in every output header");
    app.add_option("--tol", settings.tol_overrides, "Tolerance override KEY=VAL (repeatable)")
        ->take_all();
    app.add_option("--format", settings.format, "text, csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg", "text"}));
    app.add_option("--out", settings.out_file, "Write output to this file");

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Distance between two points");
    dist_cmd->add_option("domain", dist.domain_file)->required();
    dist_cmd->add_option("metric", dist.metric, "funk, rfunk, hilbert, relfunk or maxsym")
        ->required()
        ->check(CLI::IsMember({"funk", "rfunk", "hilbert", "relfunk", "maxsym"}));
    dist_cmd->add_option("x", dist.x)->required();
    dist_cmd->add_option("y", dist.y)->required();
    dist_cmd->add_option("--u", dist.u_file, "Englobing domain for relfunk");

    BallArgs ball;
    auto* ball_cmd = app.add_subcommand("ball", "Sample a metric sphere");
    ball_cmd->add_option("domain", ball.domain_file)->required();
    ball_cmd->add_option("x", ball.x)->required();
    ball_cmd->add_option("rho", ball.rho)->required();
    ball_cmd->add_flag("--backward", ball.backward, "Backward ball instead of forward");
    ball_cmd->add_option("-k", ball.k, "Number of sphere samples");

    GeodesicArgs geo;
    auto* geo_cmd = app.add_subcommand("geodesic", "Geodesic checks");
    geo_cmd->require_subcommand(1);
    auto* verify_cmd = geo_cmd->add_subcommand("verify", "Check a polyline for additivity");
    verify_cmd->add_option("domain", geo.domain_file)->required();
    verify_cmd->add_option("points", geo.points)->required();
    verify_cmd->add_flag("--hilbert", geo.hilbert, "Use the Hilbert metric");

    ProjectArgs proj;
    auto* proj_cmd = app.add_subcommand("project", "Nearest point of a segment or polytope");
    proj_cmd->add_option("domain", proj.domain_file)->required();
    proj_cmd->add_option("x", proj.x)->required();
    proj_cmd->add_option("--segment", proj.segment)->expected(2);
    proj_cmd->add_option("--set", proj.set_file, "Polytope domain file to project onto");

    TangentArgs tan;
    auto* tan_cmd = app.add_subcommand("tangent", "Tangent norm at a point");
    tan_cmd->add_option("domain", tan.domain_file)->required();
    tan_cmd->add_option("p", tan.p)->required();
    tan_cmd->add_option("v", tan.v);
    tan_cmd->add_option("--x", tan.x, "Finite-difference start");
    tan_cmd->add_option("--y", tan.y, "Finite-difference end");
    tan_cmd->add_option("--t", tan.t_list, "Step sizes")->take_all();

    std::string suite_name;
    double scale = 1.0;
    auto* suite_cmd = app.add_subcommand("suite", "Run a property battery");
    suite_cmd->add_option("name", suite_name)->required();
    suite_cmd->add_option("--scale", scale, "Multiplier on the default sample counts");

    // CLI11 takes its arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        apply_overrides(settings);
        if (settings.format == "svg" && !ball_cmd->parsed()) {
            fail(ErrorCode::InvalidArgument, "svg output is only available for ball");
        }
        if (dist_cmd->parsed()) {
            if (dist.metric != "relfunk" && !dist.u_file.empty()) {
                fail(ErrorCode::InvalidArgument, "--u only applies to relfunk");
            }
            code = cmd_dist(dist, settings, buffer);
        } else if (ball_cmd->parsed()) {
            if (settings.format.empty()) settings.format = "csv";
            code = cmd_ball(ball, settings, buffer);
        } else if (verify_cmd->parsed()) {
            code = cmd_geodesic(geo, settings, buffer);
        } else if (proj_cmd->parsed()) {
            code = cmd_project(proj, settings, buffer);
        } else if (tan_cmd->parsed()) {
            if (tan.x.empty() && tan.v.empty()) fail(ErrorCode::InvalidArgument, "give v or --x/--y");
            code = cmd_tangent(tan, settings, buffer);
        } else if (suite_cmd->parsed()) {
            code = cmd_suite(suite_name, scale, settings, buffer);
        }
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (settings.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(settings.out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << settings.out_file << "\n";
            return kInputError;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace funk::cli
