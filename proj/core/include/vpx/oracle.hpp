#pragma once

#include <cstddef>

#include "vpx/core.hpp"

namespace vpx {

// Largest domain the dense LP reference accepts (two constraints per point in primal form).
inline constexpr std::size_t kOracleMaxPoints = 10000;

struct OracleResult {
  CoefficientVector coefficients;
  double sigma = 0.0;
  std::size_t pivots = 0;
};

// Discrete minimax fit by linear programming: minimize sigma subject to
// |f(x_k) - L(A, x_k)| <= sigma for every domain point.
OracleResult lp_minimax(const Problem& problem);

}  // namespace vpx
