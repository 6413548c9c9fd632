#pragma once

#include "funk/common.hpp"

namespace funk::lp {

// Dense two-phase simplex for small problems of the form
//
//     minimize  c . x   subject to   A x <= b,   x free.
//
// Bland's rule is used for both entering and leaving variables, so the
// method terminates on degenerate problems at the price of speed. Intended
// for the handful of variables and a few dozen rows that arise when
// intersecting polytopes; not a general purpose solver.

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Vector x;
    double objective = 0.0;
};

Result minimize(const Matrix& a, const Vector& b, const Vector& c);

// Phase one only: any x with A x <= b (up to the solver tolerance).
Result find_feasible(const Matrix& a, const Vector& b);

}  // namespace funk::lp
