#include "vpx/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vpx/errors.hpp"

namespace vpx {

LiftedPoint lift_point(const Problem& problem, std::size_t index) {
  const auto g = problem.lifted_g(index);
  return {index, std::vector<double>(g.begin(), g.end())};
}

std::vector<LiftedPoint> lift_points(const Problem& problem, std::span<const std::size_t> indices) {
  std::vector<LiftedPoint> out;
  out.reserve(indices.size());
  for (std::size_t k : indices) {
    out.push_back(lift_point(problem, k));
  }
  return out;
}

namespace {

std::size_t common_dimension(std::span<const LiftedPoint> a, std::span<const LiftedPoint> b) {
  const std::size_t n = !a.empty() ? a.front().vector.size() : b.front().vector.size();
  for (const auto* set : {&a, &b}) {
    for (const auto& p : *set) {
      if (p.vector.size() != n) {
        throw ContractViolation("lifted points have mixed dimensions");
      }
    }
  }
  return n;
}

}  // namespace

RadonDecomposition radon_partition(std::span<const LiftedPoint> lifted) {
  if (lifted.empty()) {
    throw ContractViolation("radon_partition needs n + 2 points");
  }
  const std::size_t n = common_dimension(lifted, {});
  if (lifted.size() != n + 2) {
    throw ContractViolation("radon_partition needs n + 2 = " + std::to_string(n + 2) +
                            " points in R^" + std::to_string(n) + ", got " +
                            std::to_string(lifted.size()));
  }

  PointList points;
  points.reserve(lifted.size());
  for (const auto& p : lifted) {
    points.push_back(p.vector);
  }
  std::vector<double> lambda;
  try {
    lambda = affine_dependence(points);
  } catch (const NullSpaceDimensionError& e) {
    throw SingularConfiguration(std::string("no unique Radon partition: ") + e.what());
  }

  RadonDecomposition out;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (std::abs(lambda[k]) < kDegenerateWeight) {
      throw SingularConfiguration("Radon coefficient of point " + std::to_string(k) +
                                  " vanishes (" + std::to_string(lambda[k]) + ")");
    }
    if (lambda[k] > 0.0) {
      out.positive_indices.push_back(k);
      out.weights_pos.push_back(lambda[k]);
    } else {
      out.negative_indices.push_back(k);
      out.weights_neg.push_back(-lambda[k]);
    }
  }
  double neg_sum = 0.0;
  for (double w : out.weights_neg) {
    neg_sum += w;
  }
  for (double& w : out.weights_neg) {
    w /= neg_sum;
  }

  out.radon_point.assign(n, 0.0);
  for (std::size_t i = 0; i < out.positive_indices.size(); ++i) {
    const auto& v = lifted[out.positive_indices[i]].vector;
    for (std::size_t c = 0; c < n; ++c) {
      out.radon_point[c] += out.weights_pos[i] * v[c];
    }
  }
  return out;
}

JoinWeights interior_join_weights(const LiftedPoint& entering, std::span<const LiftedPoint> pos,
                                  std::span<const LiftedPoint> neg) {
  const std::size_t n = entering.vector.size();
  if (neg.empty()) {
    throw ContractViolation("interior_join_weights needs a non-empty negative set");
  }
  for (const auto* set : {&pos, &neg}) {
    for (const auto& p : *set) {
      if (p.vector.size() != n) {
        throw ContractViolation("lifted points have mixed dimensions");
      }
    }
  }
  const std::size_t np = pos.size();
  const std::size_t nq = neg.size();

  // Variables: [w_entering, w_pos..., w_neg..., t].
  const std::size_t nw = 1 + np + nq;
  const std::size_t nvar = nw + 1;
  const std::size_t nrows = nw + 2 + n;
  LpProblem lp;
  lp.objective.assign(nvar, 0.0);
  lp.constraints = DenseMatrix(nrows, nvar);
  lp.relations.assign(nrows, Relation::Equal);
  lp.rhs.assign(nrows, 0.0);

  std::size_t row = 0;
  for (std::size_t k = 0; k < nw; ++k, ++row) {
    lp.constraints(row, k) = 1.0;
    lp.constraints(row, nw) = -1.0;
    lp.relations[row] = Relation::GreaterEqual;
  }
  for (std::size_t k = 0; k <= np; ++k) {
    lp.constraints(row, k) = 1.0;
  }
  lp.rhs[row++] = 1.0;
  for (std::size_t k = 0; k < nq; ++k) {
    lp.constraints(row, 1 + np + k) = 1.0;
  }
  lp.rhs[row++] = 1.0;
  for (std::size_t c = 0; c < n; ++c, ++row) {
    lp.constraints(row, 0) = entering.vector[c];
    for (std::size_t k = 0; k < np; ++k) {
      lp.constraints(row, 1 + k) = pos[k].vector[c];
    }
    for (std::size_t k = 0; k < nq; ++k) {
      lp.constraints(row, 1 + np + k) = -neg[k].vector[c];
    }
  }

  lp.sense = Sense::Maximize;
  lp.objective[nw] = 1.0;
  auto solution = simplex_solve(lp);
  if (solution.status != LpStatus::Optimal) {
    throw EmptyIntersection(std::string("hulls of joined sets do not intersect (LP ") +
                            to_string(solution.status) + ")");
  }
  if (solution.x[nw] <= kDegenerateWeight && solution.x[0] <= kDegenerateWeight) {
    // No interior witness; fall back to the largest entering weight on the boundary.
    lp.objective.assign(nvar, 0.0);
    lp.objective[0] = 1.0;
    solution = simplex_solve(lp);
    if (solution.status != LpStatus::Optimal || solution.x[0] <= kDegenerateWeight) {
      throw EmptyIntersection("joined hulls meet only where the entering weight vanishes");
    }
  }

  JoinWeights out;
  out.entering_weight = std::max(0.0, solution.x[0]);
  out.pos_weights.reserve(np);
  out.neg_weights.reserve(nq);
  for (std::size_t k = 0; k < np; ++k) {
    out.pos_weights.push_back(std::max(0.0, solution.x[1 + k]));
  }
  for (std::size_t k = 0; k < nq; ++k) {
    out.neg_weights.push_back(std::max(0.0, solution.x[1 + np + k]));
  }
  out.min_weight = out.entering_weight;
  for (double w : out.pos_weights) {
    out.min_weight = std::min(out.min_weight, w);
  }
  for (double w : out.neg_weights) {
    out.min_weight = std::min(out.min_weight, w);
  }
  return out;
}

HullIntersection hulls_intersect(std::span<const LiftedPoint> g_plus,
                                 std::span<const LiftedPoint> g_minus, double tol) {
  if (g_plus.empty() || g_minus.empty()) {
    throw ContractViolation("hulls_intersect needs two non-empty sets");
  }
  const std::size_t n = common_dimension(g_plus, g_minus);
  const std::size_t np = g_plus.size();
  const std::size_t nq = g_minus.size();

  LpProblem lp;
  lp.objective.assign(np + nq, 0.0);
  lp.constraints = DenseMatrix(n + 2, np + nq);
  lp.relations.assign(n + 2, Relation::Equal);
  lp.rhs.assign(n + 2, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < np; ++k) {
      lp.constraints(c, k) = g_plus[k].vector[c];
    }
    for (std::size_t k = 0; k < nq; ++k) {
      lp.constraints(c, np + k) = -g_minus[k].vector[c];
    }
  }
  for (std::size_t k = 0; k < np; ++k) {
    lp.constraints(n, k) = 1.0;
  }
  for (std::size_t k = 0; k < nq; ++k) {
    lp.constraints(n + 1, np + k) = 1.0;
  }
  lp.rhs[n] = 1.0;
  lp.rhs[n + 1] = 1.0;

  const auto solution = simplex_solve(lp);
  HullIntersection out;
  out.lp_status = solution.status;
  if (solution.status != LpStatus::Optimal) {
    return out;
  }
  out.u.assign(solution.x.begin(), solution.x.begin() + static_cast<std::ptrdiff_t>(np));
  out.v.assign(solution.x.begin() + static_cast<std::ptrdiff_t>(np), solution.x.end());
  for (double& w : out.u) {
    w = std::max(0.0, w);
  }
  for (double& w : out.v) {
    w = std::max(0.0, w);
  }

  out.common_point.assign(n, 0.0);
  std::vector<double> other(n, 0.0);
  double sum_u = 0.0;
  double sum_v = 0.0;
  for (std::size_t k = 0; k < np; ++k) {
    sum_u += out.u[k];
    for (std::size_t c = 0; c < n; ++c) {
      out.common_point[c] += out.u[k] * g_plus[k].vector[c];
    }
  }
  for (std::size_t k = 0; k < nq; ++k) {
    sum_v += out.v[k];
    for (std::size_t c = 0; c < n; ++c) {
      other[c] += out.v[k] * g_minus[k].vector[c];
    }
  }
  double residual = std::max(std::abs(sum_u - 1.0), std::abs(sum_v - 1.0));
  for (std::size_t c = 0; c < n; ++c) {
    residual = std::max(residual, std::abs(out.common_point[c] - other[c]));
  }
  out.residual = residual;
  out.intersect = residual <= tol;
  return out;
}

}  // namespace vpx
