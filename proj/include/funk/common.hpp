#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace funk {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Points and directions share storage; the distinction is carried by naming.
using Point = Vector;
using Direction = Vector;

// Numerical tolerances used across the library. Every operation takes a
// Tolerances argument defaulting to these values so that the CLI can
// override them per run.
struct Tolerances {
    double boundary = 1e-9;      // boundary membership
    double direction = 1e-12;    // parallel-ray classification (relative)
    double face = 1e-7;          // face activation distance
    double geometry = 1e-8;      // geometric comparisons
    double determinant = 1e-12;  // affine map invertibility (relative)
    double point = 1e-13;        // x ~ y short circuit
    double rank = 1e-7;          // projective alignment, relative singular value
    double align_defect = 1e-9;  // defect allowed for aligned triples
    double geodesic = 1e-9;      // polyline additivity defect
    double parallel = 1e-9;      // hyperplane parallelism
    double line = 1e-9;          // collinearity, relative to segment length
    double area = 1e-12;         // degenerate triangles, relative to diam^2
    double zero_clamp = 1e-14;   // metric values below this are reported as 0

    // Sets a field by its name; returns false for unknown keys.
    bool set(const std::string& key, double value);
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

enum class ErrorCode {
    DimensionMismatch,
    NotInterior,
    NotOnBoundary,
    Degenerate,
    Singular,
    Containment,
    InvalidArgument,
    Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

bool all_finite(const Vector& v);

}  // namespace funk
