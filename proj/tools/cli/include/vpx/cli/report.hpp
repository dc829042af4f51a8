#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vpx/core.hpp"
#include "vpx/oracle.hpp"
#include "vpx/solver.hpp"

namespace vpx::cli {

using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to exactly `value`; "null" for non-finite values.
std::string format_double(double value);

// Two-space indented JSON with shortest round-trip numbers and a trailing newline.
std::string serialize(const Json& value);

Json solve_report(const SolveResult& result, const Problem& problem);
Json oracle_report(const OracleResult& result, const Problem& problem);
Json certify_report(const CertifyOutcome& outcome, const CoefficientVector& coefficients,
                    const Problem& problem, double tol);

}  // namespace vpx::cli
