#include "funk/domain_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace funk {
namespace {

using json = nlohmann::json;

// nlohmann/json keeps no source positions, so a separate pass over the raw
// text records the line at which each value (by JSON pointer) starts.
class LineIndex {
public:
    explicit LineIndex(const std::string& text) : text_(text) {
        skip_ws();
        if (pos_ < text_.size()) value("");
    }

    int line_of(std::string pointer) const {
        for (;;) {
            auto it = lines_.find(pointer);
            if (it != lines_.end()) return it->second;
            auto cut = pointer.rfind('/');
            if (cut == std::string::npos) return 1;
            pointer.resize(cut);
        }
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string string_token() {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            out += text_[pos_++];
        }
        ++pos_;
        return out;
    }

    void value(const std::string& pointer) {
        skip_ws();
        if (pos_ >= text_.size()) return;
        lines_.emplace(pointer, line_);
        char ch = text_[pos_];
        if (ch == '{') {
            ++pos_;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == '}') break;
                if (text_[pos_] != '"') return;
                std::string key = string_token();
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ':') ++pos_;
                value(pointer + "/" + key);
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
            }
            ++pos_;
        } else if (ch == '[') {
            ++pos_;
            for (int i = 0;; ++i) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == ']') break;
                value(pointer + "/" + std::to_string(i));
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
            }
            ++pos_;
        } else if (ch == '"') {
            string_token();
        } else {
            while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                   text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}') {
                ++pos_;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::map<std::string, int> lines_;
};

class Parser {
public:
    Parser(const std::string& text, const Tolerances& tol) : index_(text), tol_(tol) {}

    [[noreturn]] void error(const std::string& pointer, const std::string& what) const {
        std::ostringstream os;
        os << "line " << index_.line_of(pointer) << ": " << what;
        if (!pointer.empty()) os << " (at " << pointer << ")";
        fail(ErrorCode::Parse, os.str());
    }

    double number(const json& j, const std::string& ptr) const {
        if (!j.is_number()) error(ptr, "expected a number");
        double v = j.get<double>();
        if (!std::isfinite(v)) error(ptr, "number is not finite");
        return v;
    }

    Vector vector(const json& j, const std::string& ptr, int n) const {
        if (!j.is_array()) error(ptr, "expected an array of numbers");
        if (static_cast<int>(j.size()) != n) {
            error(ptr, "expected " + std::to_string(n) + " numbers, got " +
                           std::to_string(j.size()));
        }
        Vector v(n);
        for (int i = 0; i < n; ++i) v(i) = number(j[i], ptr + "/" + std::to_string(i));
        return v;
    }

    const json& field(const json& obj, const std::string& ptr, const char* key) const {
        if (!obj.contains(key)) error(ptr, std::string("missing field \"") + key + "\"");
        return obj.at(key);
    }

    ConvexDomain domain(const json& obj, const std::string& ptr, std::optional<int> dim) const {
        if (!obj.is_object()) error(ptr, "expected a domain object");
        if (obj.contains("dim")) {
            const json& d = obj.at("dim");
            if (!d.is_number_integer() || d.get<long long>() < 1) {
                error(ptr + "/dim", "dim must be a positive integer");
            }
            int n = static_cast<int>(d.get<long long>());
            if (dim && *dim != n) error(ptr + "/dim", "dim disagrees with the enclosing domain");
            dim = n;
        }
        if (!dim) error(ptr, "missing field \"dim\"");
        const int n = *dim;
        const json& kind = field(obj, ptr, "kind");
        if (!kind.is_string()) error(ptr + "/kind", "kind must be a string");
        const std::string k = kind.get<std::string>();
        if (k == "hpolytope") return polytope(obj, ptr, n);
        if (k == "ball") return ball(obj, ptr, n);
        if (k == "affine_image") return affine(obj, ptr, n);
        if (k == "intersection") return meet(obj, ptr, n);
        error(ptr + "/kind", "unknown kind \"" + k + "\"");
    }

    ConvexDomain polytope(const json& obj, const std::string& ptr, int n) const {
        const std::string cptr = ptr + "/constraints";
        const json& cs = field(obj, ptr, "constraints");
        if (!cs.is_array() || cs.empty()) error(cptr, "constraints must be a nonempty array");
        std::vector<Constraint> constraints;
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const std::string rptr = cptr + "/" + std::to_string(j);
            Vector row = vector(cs[j], rptr, n + 1);
            Vector normal = row.head(n);
            if (normal.norm() == 0.0) error(rptr, "constraint has a zero normal");
            constraints.push_back({normal, row(n)});
        }
        std::vector<Point> vertices;
        if (obj.contains("vertices")) {
            const json& vs = obj.at("vertices");
            if (!vs.is_array()) error(ptr + "/vertices", "vertices must be an array");
            for (std::size_t i = 0; i < vs.size(); ++i) {
                vertices.push_back(vector(vs[i], ptr + "/vertices/" + std::to_string(i), n));
            }
        }
        std::optional<Point> witness;
        if (obj.contains("witness")) witness = vector(obj.at("witness"), ptr + "/witness", n);
        try {
            return HPolytope(std::move(constraints), std::move(vertices), witness, tol_);
        } catch (const Error& e) {
            error(locate(e.what(), ptr), e.what());
        }
    }

    ConvexDomain ball(const json& obj, const std::string& ptr, int n) const {
        Point center = vector(field(obj, ptr, "center"), ptr + "/center", n);
        double radius = number(field(obj, ptr, "radius"), ptr + "/radius");
        if (!(radius > 0.0)) error(ptr + "/radius", "radius must be positive");
        return EuclideanBall(center, radius);
    }

    ConvexDomain affine(const json& obj, const std::string& ptr, int n) const {
        ConvexDomain inner = domain(field(obj, ptr, "inner"), ptr + "/inner", n);
        const std::string mptr = ptr + "/matrix";
        const json& m = field(obj, ptr, "matrix");
        if (!m.is_array() || static_cast<int>(m.size()) != n) {
            error(mptr, "matrix must have " + std::to_string(n) + " rows");
        }
        Matrix mat(n, n);
        for (int i = 0; i < n; ++i) {
            mat.row(i) = vector(m[i], mptr + "/" + std::to_string(i), n).transpose();
        }
        Vector shift = Vector::Zero(n);
        if (obj.contains("translation")) {
            shift = vector(obj.at("translation"), ptr + "/translation", n);
        }
        try {
            return affine_image(inner, AffineMap(mat, shift, tol_));
        } catch (const Error& e) {
            error(mptr, e.what());
        }
    }

    ConvexDomain meet(const json& obj, const std::string& ptr, int n) const {
        const json& ps = field(obj, ptr, "parts");
        if (!ps.is_array() || ps.empty()) error(ptr + "/parts", "parts must be a nonempty array");
        std::vector<ConvexDomain> parts;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            parts.push_back(domain(ps[i], ptr + "/parts/" + std::to_string(i), n));
        }
        std::optional<Point> witness;
        if (obj.contains("witness")) witness = vector(obj.at("witness"), ptr + "/witness", n);
        try {
            return intersection(std::move(parts), witness);
        } catch (const Error& e) {
            error(obj.contains("witness") ? ptr + "/witness" : ptr, e.what());
        }
    }

private:
    // Points a construction error at the vertex, constraint or witness it names.
    static std::string locate(const std::string& what, const std::string& ptr) {
        std::smatch m;
        static const std::regex vertex("vertex ([0-9]+)");
        static const std::regex constraint("constraint ([0-9]+)");
        if (std::regex_search(what, m, vertex)) return ptr + "/vertices/" + m[1].str();
        if (std::regex_search(what, m, constraint)) return ptr + "/constraints/" + m[1].str();
        if (what.find("witness") != std::string::npos) return ptr + "/witness";
        return ptr + "/constraints";
    }

    LineIndex index_;
    const Tolerances& tol_;
};

}  // namespace

ConvexDomain parse_domain(const std::string& text, const Tolerances& tol) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line;
        }
        fail(ErrorCode::Parse, "line " + std::to_string(line) + ": malformed JSON");
    }
    Parser parser(text, tol);
    return parser.domain(doc, "", std::nullopt);
}

ConvexDomain load_domain(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Parse, "cannot open domain file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_domain(buf.str(), tol);
}

}  // namespace funk
