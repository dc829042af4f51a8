#include "vpx/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "vpx/errors.hpp"

namespace vpx {

DiscreteDomain::DiscreteDomain(std::vector<Point> points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.empty()) {
    throw ContractViolation("domain must contain at least one point");
  }
  if (points_.size() != values_.size()) {
    throw ContractViolation("domain has " + std::to_string(points_.size()) + " points but " +
                            std::to_string(values_.size()) + " values");
  }
  dimension_ = points_.front().size();
  if (dimension_ == 0) {
    throw ContractViolation("domain points must have positive dimension");
  }
  std::set<Point> seen;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k].size() != dimension_) {
      throw ContractViolation("point " + std::to_string(k) + " has dimension " +
                              std::to_string(points_[k].size()) + ", expected " +
                              std::to_string(dimension_));
    }
    if (!seen.insert(points_[k]).second) {
      throw ContractViolation("duplicate domain point at index " + std::to_string(k));
    }
  }
}

BasisFamily::BasisFamily(std::size_t dimension, std::vector<Function> functions)
    : dimension_(dimension), functions_(std::move(functions)) {
  if (dimension_ == 0) {
    throw ContractViolation("basis family dimension must be positive");
  }
  if (functions_.empty()) {
    throw ContractViolation("basis family needs at least one function");
  }
  for (const auto& fn : functions_) {
    if (!fn.evaluate) {
      throw ContractViolation("basis function '" + fn.label + "' has no evaluator");
    }
  }
}

double BasisFamily::evaluate(std::size_t i, std::span<const double> x) const {
  if (x.size() != dimension_) {
    throw ContractViolation("point dimension " + std::to_string(x.size()) +
                            " does not match family dimension " + std::to_string(dimension_));
  }
  return functions_.at(i).evaluate(x);
}

std::vector<double> BasisFamily::lift(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(functions_.size() + 1);
  out.push_back(1.0);
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    out.push_back(evaluate(i, x));
  }
  return out;
}

Problem::Problem(DiscreteDomain domain, BasisFamily family)
    : domain_(std::move(domain)), family_(std::move(family)) {
  if (domain_.dimension() != family_.dimension()) {
    throw ContractViolation("domain dimension " + std::to_string(domain_.dimension()) +
                            " does not match basis dimension " +
                            std::to_string(family_.dimension()));
  }
  const std::size_t width = family_.size() + 1;
  lifted_.reserve(domain_.size() * width);
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    const auto row = family_.lift(domain_.point(k));
    lifted_.insert(lifted_.end(), row.begin(), row.end());
  }
}

std::span<const double> Problem::lifted(std::size_t k) const {
  const std::size_t width = family_.size() + 1;
  if (k >= domain_.size()) {
    throw ContractViolation("domain index " + std::to_string(k) + " out of range");
  }
  return std::span<const double>(lifted_).subspan(k * width, width);
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

}  // namespace

double evaluate_model(const CoefficientVector& coefficients, const BasisFamily& family,
                      std::span<const double> x) {
  if (coefficients.size() != family.size() + 1) {
    throw ContractViolation("coefficient vector has " + std::to_string(coefficients.size()) +
                            " entries, expected " + std::to_string(family.size() + 1));
  }
  const auto lifted = family.lift(x);
  return dot(coefficients.a, lifted);
}

DeviationProfile deviation_profile(const CoefficientVector& coefficients, const Problem& problem) {
  if (coefficients.size() != problem.basis_size() + 1) {
    throw ContractViolation("coefficient vector has " + std::to_string(coefficients.size()) +
                            " entries, expected " + std::to_string(problem.basis_size() + 1));
  }
  DeviationProfile profile;
  profile.residuals.resize(problem.size());
  for (std::size_t k = 0; k < problem.size(); ++k) {
    const double r = problem.domain().value(k) - dot(coefficients.a, problem.lifted(k));
    profile.residuals[k] = r;
    // Strict comparison keeps the lowest index on ties.
    if (std::abs(r) > profile.max_abs) {
      profile.max_abs = std::abs(r);
      profile.argmax_index = k;
    }
  }
  return profile;
}

ExtremeSets extreme_sets(const DeviationProfile& profile, double tol) {
  if (!(tol >= 0.0)) {
    throw ContractViolation("extreme-set tolerance must be non-negative");
  }
  const double level = profile.max_abs - tol;
  ExtremeSets sets;
  for (std::size_t k = 0; k < profile.residuals.size(); ++k) {
    const double r = profile.residuals[k];
    if (r >= level) {
      sets.plus.push_back(k);
    }
    if (r <= -level) {
      sets.minus.push_back(k);
    }
  }
  return sets;
}

double default_extreme_tolerance(double max_abs) noexcept {
  return 1e-9 * std::max(1.0, max_abs);
}

}  // namespace vpx
