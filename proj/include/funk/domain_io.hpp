#pragma once

#include "funk/convex_core.hpp"

#include <string>

namespace funk {

/// Reads a domain from its JSON description:
///
///     {"dim": 2, "kind": "hpolytope",
///      "constraints": [[1, 0, 1], [-1, 0, 1], ...],   // [c_1..c_n, s] : <c, x> < s
///      "vertices": [[1, 1], ...], "witness": [0, 0]}   // both optional
///     {"dim": 2, "kind": "ball", "center": [0, 0], "radius": 1}
///     {"dim": 2, "kind": "affine_image", "inner": {...},
///      "matrix": [[2, 0], [0, 1]], "translation": [0, 0]}
///     {"dim": 2, "kind": "intersection", "parts": [{...}, {...}], "witness": [0, 0]}
///
/// Nested objects may omit "dim". Every rejection throws Error with code
/// Parse and a message starting with "line N:" that points at the offending
/// value.
ConvexDomain parse_domain(const std::string& text, const Tolerances& tol = default_tolerances());

ConvexDomain load_domain(const std::string& path, const Tolerances& tol = default_tolerances());

}  // namespace funk
