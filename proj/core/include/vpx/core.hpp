#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vpx {

using Point = std::vector<double>;

// Finite evaluation set with sampled target values, index-aligned.
// Points are pairwise distinct under exact coordinate comparison.
class DiscreteDomain {
 public:
  DiscreteDomain(std::vector<Point> points, std::vector<double> values);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }

  std::span<const double> point(std::size_t k) const { return points_.at(k); }
  double value(std::size_t k) const { return values_.at(k); }

  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
  std::vector<double> values_;
};

// Ordered basis functions g_1..g_n on R^d. The constant term a_0 is implicit and never a member.
class BasisFamily {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  struct Function {
    std::string label;
    Evaluator evaluate;
  };

  BasisFamily(std::size_t dimension, std::vector<Function> functions);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return functions_.size(); }
  const std::string& label(std::size_t i) const { return functions_.at(i).label; }

  double evaluate(std::size_t i, std::span<const double> x) const;

  // (1, g_1(x), ..., g_n(x)).
  std::vector<double> lift(std::span<const double> x) const;

 private:
  std::size_t dimension_;
  std::vector<Function> functions_;
};

// (a_0, a_1, ..., a_n).
struct CoefficientVector {
  std::vector<double> a;

  std::size_t size() const noexcept { return a.size(); }
  double operator[](std::size_t i) const { return a[i]; }
  bool operator==(const CoefficientVector&) const = default;
};

// Residuals r_k = f(x_k) - L(A, x_k) over a domain.
struct DeviationProfile {
  std::vector<double> residuals;
  double max_abs = 0.0;
  std::size_t argmax_index = 0;
};

struct ExtremeSets {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

// A domain paired with a basis family. The lifted table (1, g(x_k)) is computed once at construction.
class Problem {
 public:
  Problem(DiscreteDomain domain, BasisFamily family);

  const DiscreteDomain& domain() const noexcept { return domain_; }
  const BasisFamily& family() const noexcept { return family_; }

  std::size_t size() const noexcept { return domain_.size(); }
  // Number of basis functions n; coefficient vectors have n + 1 entries.
  std::size_t basis_size() const noexcept { return family_.size(); }

  // (1, g_1(x_k), ..., g_n(x_k)).
  std::span<const double> lifted(std::size_t k) const;
  // (g_1(x_k), ..., g_n(x_k)).
  std::span<const double> lifted_g(std::size_t k) const { return lifted(k).subspan(1); }

 private:
  DiscreteDomain domain_;
  BasisFamily family_;
  std::vector<double> lifted_;
};

double evaluate_model(const CoefficientVector& coefficients, const BasisFamily& family,
                      std::span<const double> x);

DeviationProfile deviation_profile(const CoefficientVector& coefficients, const Problem& problem);

// E+ = {k : r_k >= max_abs - tol}, E- = {k : r_k <= -(max_abs - tol)}, ascending.
ExtremeSets extreme_sets(const DeviationProfile& profile, double tol);

// 1e-9 * max(1, max_abs).
double default_extreme_tolerance(double max_abs) noexcept;

}  // namespace vpx
