#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "vpx/core.hpp"
#include "vpx/errors.hpp"
#include "vpx/solver.hpp"

namespace vpx::cli {

// Malformed or schema-invalid input. The message names the source, and the line/column for
// syntax errors or the offending field path for schema errors.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct ProblemSpec {
  Problem problem;
  SolveOptions options;
};

// Problem file (JSON):
//
//   dimension  positive integer d
//   grid       {"cartesian": [{"min", "max", "count"} per axis]} or {"explicit": [[x...], ...]}
//              Cartesian points are enumerated row-major over the axes in declaration order
//              (axis 0 slowest); coordinate j of an axis is ((count-1-j)*min + j*max)/(count-1),
//              or min when count == 1.
//   function   {"builtin": name} with name in exp, runge, product, abs-sum, sum-squares, or
//              {"values": [f per grid point]}
//   basis      {"type": "monomials", "degree"}
//              {"type": "trig", "harmonics"}
//              {"type": "gaussian", "centers": [[...]], "c"}
//              {"type": "expressions", "functions": [{"kind", "axis", "k", "c", "center",
//                                                     "exponents"}, ...]}
//              {"type": "tabulated", "labels": [...], "values": [[g_i per grid point], ...]}
//   options    optional {"tol", "max_iterations", "seed", "singular_policy", "retries"}
ProblemSpec parse_problem(std::string_view text, const std::string& source);
ProblemSpec load_problem(const std::filesystem::path& path);

// A bare JSON array, or an object with a "coefficients" array (such as a solve report).
CoefficientVector parse_coefficients(std::string_view text, const std::string& source);
CoefficientVector load_coefficients(const std::filesystem::path& path);

// Builtin target functions by name; nullopt for unknown names.
std::optional<double> evaluate_builtin(std::string_view name, std::span<const double> x);

}  // namespace vpx::cli
