#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace vpx {

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  const std::vector<double>& entries() const noexcept { return entries_; }

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Relative pivot threshold below which a matrix is declared singular.
inline constexpr double kSingularPivotTolerance = 1e-12;

// Solves M x = b by Gaussian elimination with partial (row) pivoting.
// Throws SingularMatrix when a pivot falls below 1e-12 times the largest initial column magnitude.
std::vector<double> solve_dense(const DenseMatrix& m, std::span<const double> b);

using PointList = std::vector<std::vector<double>>;

// For m = p + 2 points in R^p returns lambda with sum(lambda) = 0 and sum(lambda_i * point_i) = 0,
// scaled so the positive entries sum to 1 and the first non-negligible entry is positive.
// Throws NullSpaceDimensionError when the dependence space is not one-dimensional.
std::vector<double> affine_dependence(const PointList& points);

// True iff point_i - point_0 (i >= 1) have full numerical rank.
bool affine_independent(const PointList& points);

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status) noexcept;

struct VariableBound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();

  static VariableBound free() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
};

struct LpProblem {
  Sense sense = Sense::Minimize;
  std::vector<double> objective;
  DenseMatrix constraints;
  std::vector<Relation> relations;
  std::vector<double> rhs;
  // Empty means every variable is >= 0.
  std::vector<VariableBound> bounds;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  // Simplex multipliers y of the constraint rows, in the problem's own sense: at an optimum
  // c_j - y^T A_j has the sign of a non-improving reduced cost for every column j.
  std::vector<double> duals;
  std::size_t pivots = 0;
};

struct SimplexOptions {
  // Defaults to 50 * (rows + cols) of the internal tableau.
  std::optional<std::size_t> pivot_limit;
  // Bland's rule replaces Dantzig pricing after this many pivots; defaults to 2 * (rows + cols).
  std::optional<std::size_t> bland_after;
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
};

// Two-phase dense tableau simplex. Throws IterationLimit when the pivot cap is exceeded.
LpSolution simplex_solve(const LpProblem& lp, const SimplexOptions& options = {});

}  // namespace vpx
