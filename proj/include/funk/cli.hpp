#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace funk::cli {

// Exit codes: 0 all checks pass, 1 an invariant failed, 2 invalid input.
constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kInputError = 2;

// Runs one command line (without the program name). Regular output goes to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 12 significant digits, trailing zeros kept: 0.693147180560.
std::string format_number(double v);

}  // namespace funk::cli
