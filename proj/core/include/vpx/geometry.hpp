#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vpx/core.hpp"
#include "vpx/numerics.hpp"

namespace vpx {

// A domain point embedded in model-parameter space as (g_1(x), ..., g_n(x)).
// The leading 1 of the lifted vector is common to every point and is dropped here.
struct LiftedPoint {
  std::size_t source_index = 0;
  std::vector<double> vector;
};

LiftedPoint lift_point(const Problem& problem, std::size_t index);
std::vector<LiftedPoint> lift_points(const Problem& problem, std::span<const std::size_t> indices);

// Weights below this declare a configuration singular.
inline constexpr double kDegenerateWeight = 1e-10;

// Split of n + 2 lifted points with a common point of both convex hulls. Index lists refer to
// positions in the input sequence, not to domain indices.
struct RadonDecomposition {
  std::vector<std::size_t> positive_indices;
  std::vector<std::size_t> negative_indices;
  std::vector<double> weights_pos;
  std::vector<double> weights_neg;
  std::vector<double> radon_point;
};

// Throws SingularConfiguration when the dependence is not unique or has a zero coefficient.
RadonDecomposition radon_partition(std::span<const LiftedPoint> lifted);

// Convex weights that place a common point in conv(entering, pos...) and conv(neg...),
// chosen to maximize the smallest weight.
struct JoinWeights {
  double entering_weight = 0.0;
  std::vector<double> pos_weights;
  std::vector<double> neg_weights;
  double min_weight = 0.0;
};

// An exchange passes n + 3 points in total; any non-empty negative set is accepted.
// Throws EmptyIntersection when no witness with a positive entering weight exists.
JoinWeights interior_join_weights(const LiftedPoint& entering, std::span<const LiftedPoint> pos,
                                  std::span<const LiftedPoint> neg);

// Outcome of the convex-hull intersection test; `intersect` is false for a refusal.
struct HullIntersection {
  bool intersect = false;
  LpStatus lp_status = LpStatus::Infeasible;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> common_point;
  // ||sum u_i G+_i - sum v_j G-_j||_inf, also covering |sum u - 1| and |sum v - 1|.
  double residual = 0.0;

  explicit operator bool() const noexcept { return intersect; }
};

HullIntersection hulls_intersect(std::span<const LiftedPoint> g_plus,
                                 std::span<const LiftedPoint> g_minus, double tol);

}  // namespace vpx
