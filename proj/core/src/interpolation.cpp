#include "vpx/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vpx/errors.hpp"
#include "vpx/geometry.hpp"

namespace vpx {

SignedBasis::SignedBasis(std::vector<std::size_t> positive, std::vector<std::size_t> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (positive_.empty() || negative_.empty()) {
    throw ContractViolation("signed basis needs at least one point on each side");
  }
  std::sort(positive_.begin(), positive_.end());
  std::sort(negative_.begin(), negative_.end());
  std::vector<std::size_t> all(positive_);
  all.insert(all.end(), negative_.begin(), negative_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ContractViolation("signed basis sides must be disjoint sets of distinct points");
  }
}

std::vector<std::size_t> SignedBasis::ordered_points() const {
  std::vector<std::size_t> out(positive_);
  out.insert(out.end(), negative_.begin(), negative_.end());
  return out;
}

std::vector<int> SignedBasis::ordered_signs() const {
  std::vector<int> out(positive_.size(), 1);
  out.insert(out.end(), negative_.size(), -1);
  return out;
}

bool SignedBasis::same_partition(const SignedBasis& other) const noexcept {
  return (positive_ == other.positive_ && negative_ == other.negative_) ||
         (positive_ == other.negative_ && negative_ == other.positive_);
}

LinearSystem build_system(const SignedBasis& basis, const Problem& problem) {
  const std::size_t n = problem.basis_size();
  LinearSystem system;
  system.row_points = basis.ordered_points();
  system.row_signs = basis.ordered_signs();
  const std::size_t rows = system.row_points.size();
  system.matrix = DenseMatrix(rows, n + 2);
  system.rhs.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t k = system.row_points[r];
    if (k >= problem.size()) {
      throw ContractViolation("basis index " + std::to_string(k) + " outside the domain");
    }
    const auto lifted = problem.lifted(k);
    std::copy(lifted.begin(), lifted.end(), system.matrix.row(r).begin());
    system.matrix(r, n + 1) = static_cast<double>(system.row_signs[r]);
    system.rhs[r] = problem.domain().value(k);
  }
  return system;
}

NonSingularityCheck check_non_singular(const SignedBasis& basis, const Problem& problem) {
  const std::size_t n = problem.basis_size();
  NonSingularityCheck check;
  if (basis.size() != n + 2) {
    check.reason = "basis has " + std::to_string(basis.size()) + " points, expected " +
                   std::to_string(n + 2);
    return check;
  }
  const auto points = basis.ordered_points();
  for (std::size_t k : points) {
    if (k >= problem.size()) {
      check.reason = "basis index " + std::to_string(k) + " outside the domain";
      return check;
    }
  }
  const auto lifted = lift_points(problem, points);

  RadonDecomposition radon;
  try {
    radon = radon_partition(lifted);
  } catch (const SingularConfiguration& e) {
    check.reason = e.what();
    PointList raw;
    for (const auto& p : lifted) {
      raw.push_back(p.vector);
    }
    try {
      const auto lambda = affine_dependence(raw);
      std::size_t smallest = 0;
      for (std::size_t i = 1; i < lambda.size(); ++i) {
        if (std::abs(lambda[i]) < std::abs(lambda[smallest])) {
          smallest = i;
        }
      }
      check.offending_position = smallest;
    } catch (const NullSpaceDimensionError&) {
    }
    return check;
  }

  std::vector<std::size_t> radon_positive;
  for (std::size_t pos : radon.positive_indices) {
    radon_positive.push_back(points[pos]);
  }
  std::sort(radon_positive.begin(), radon_positive.end());
  if (radon_positive != basis.positive() && radon_positive != basis.negative()) {
    check.reason = "partition does not match the Radon partition of its lifted points";
    return check;
  }

  for (std::size_t skip = 0; skip < lifted.size(); ++skip) {
    PointList subset;
    subset.reserve(lifted.size() - 1);
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      if (i != skip) {
        subset.push_back(lifted[i].vector);
      }
    }
    if (!affine_independent(subset)) {
      check.reason = "leave-one-out subset without position " + std::to_string(skip) +
                     " is affinely dependent";
      check.offending_position = skip;
      return check;
    }
  }
  check.ok = true;
  return check;
}

Interpolant normalize_sign(Interpolant raw) {
  if (std::abs(raw.sigma) <= 1e-12) {
    raw.degenerate_zero = true;
    raw.sigma = std::abs(raw.sigma);
    return raw;
  }
  if (raw.sigma < 0.0) {
    raw.sigma = -raw.sigma;
    raw.basis = raw.basis.swapped();
  }
  return raw;
}

Interpolant chebyshev_interpolant(const SignedBasis& basis, const Problem& problem) {
  const auto check = check_non_singular(basis, problem);
  if (!check.ok) {
    throw SingularBasis("singular basis: " + check.reason);
  }
  const auto system = build_system(basis, problem);
  std::vector<double> solution;
  try {
    solution = solve_dense(system.matrix, system.rhs);
  } catch (const SingularMatrix& e) {
    throw SingularBasis(std::string("interpolation system is singular: ") + e.what());
  }

  const std::size_t n = problem.basis_size();
  Interpolant raw{CoefficientVector{std::vector<double>(solution.begin(), solution.begin() +
                                                                             static_cast<std::ptrdiff_t>(n + 1))},
                  solution[n + 1], basis, false};
  auto out = normalize_sign(std::move(raw));

  const double bound = 1e-9 * (1.0 + out.sigma);
  const auto points = out.basis.ordered_points();
  const auto signs = out.basis.ordered_signs();
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto lifted = problem.lifted(points[r]);
    double model = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      model += out.coefficients.a[i] * lifted[i];
    }
    const double residual = problem.domain().value(points[r]) - model;
    const double expected = out.degenerate_zero ? 0.0 : signs[r] * out.sigma;
    if (std::abs(residual - expected) > bound) {
      throw VerificationFailure("interpolant misses equal deviation at domain index " +
                                std::to_string(points[r]) + " by " +
                                std::to_string(std::abs(residual - expected)));
    }
  }
  return out;
}

}  // namespace vpx
