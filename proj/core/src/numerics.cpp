#include "vpx/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "vpx/errors.hpp"

namespace vpx {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ContractViolation("matrix entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    return {};
  }
  DenseMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw ContractViolation("ragged matrix rows");
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw ContractViolation("matrix-vector dimension mismatch");
  }
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row_view = row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      s += row_view[c] * x[c];
    }
    out[r] = s;
  }
  return out;
}

std::vector<double> solve_dense(const DenseMatrix& m, std::span<const double> b) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw ContractViolation("solve_dense needs a square matrix");
  }
  if (b.size() != n) {
    throw ContractViolation("right-hand side length does not match matrix rows");
  }

  std::vector<double> column_scale(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      column_scale[c] = std::max(column_scale[c], std::abs(m(r, c)));
    }
  }

  DenseMatrix a = m;
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(pivot_row, k))) {
        pivot_row = r;
      }
    }
    const double pivot = a(pivot_row, k);
    if (column_scale[k] == 0.0 || std::abs(pivot) < kSingularPivotTolerance * column_scale[k]) {
      throw SingularMatrix(k, std::abs(pivot));
    }
    if (pivot_row != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(pivot_row).begin());
      std::swap(x[k], x[pivot_row]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = a(r, k) / pivot;
      if (factor == 0.0) {
        continue;
      }
      for (std::size_t c = k; c < n; ++c) {
        a(r, c) -= factor * a(k, c);
      }
      x[r] -= factor * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = x[k];
    for (std::size_t c = k + 1; c < n; ++c) {
      s -= a(k, c) * x[c];
    }
    x[k] = s / a(k, k);
  }
  return x;
}

namespace {

// Gauss-Jordan elimination with full pivoting. On return the leading `rank` rows hold the
// reduced echelon form in the permuted column order `columns`.
struct EchelonForm {
  DenseMatrix reduced;
  std::vector<std::size_t> columns;
  std::size_t rank = 0;
  double smallest_pivot = 0.0;
};

EchelonForm full_pivot_echelon(DenseMatrix a, double relative_tol) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  double scale = 0.0;
  for (double v : a.entries()) {
    scale = std::max(scale, std::abs(v));
  }
  EchelonForm out;
  out.columns.resize(cols);
  std::iota(out.columns.begin(), out.columns.end(), std::size_t{0});
  out.smallest_pivot = std::numeric_limits<double>::infinity();
  if (scale == 0.0) {
    out.reduced = std::move(a);
    return out;
  }

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t best_r = k;
    std::size_t best_c = k;
    double best = -1.0;
    for (std::size_t r = k; r < rows; ++r) {
      for (std::size_t c = k; c < cols; ++c) {
        const double v = std::abs(a(r, out.columns[c]));
        if (v > best) {
          best = v;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best <= relative_tol * scale) {
      break;
    }
    if (best_r != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(best_r).begin());
    }
    std::swap(out.columns[k], out.columns[best_c]);
    out.smallest_pivot = std::min(out.smallest_pivot, best / scale);

    const std::size_t pc = out.columns[k];
    const double pivot = a(k, pc);
    for (std::size_t c = 0; c < cols; ++c) {
      a(k, c) /= pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == k) {
        continue;
      }
      const double factor = a(r, pc);
      if (factor == 0.0) {
        continue;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        a(r, c) -= factor * a(k, c);
      }
    }
    out.rank = k + 1;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace

std::vector<double> affine_dependence(const PointList& points) {
  const std::size_t m = points.size();
  if (m < 2) {
    throw ContractViolation("affine_dependence needs at least two points");
  }
  const std::size_t p = points.front().size();
  if (m != p + 2) {
    throw ContractViolation("affine_dependence needs p + 2 points in R^p, got " +
                            std::to_string(m) + " points in R^" + std::to_string(p));
  }

  // Stack [points as columns; all-ones row].
  DenseMatrix stacked(p + 1, m);
  for (std::size_t k = 0; k < m; ++k) {
    if (points[k].size() != p) {
      throw ContractViolation("affine_dependence points have mixed dimensions");
    }
    for (std::size_t i = 0; i < p; ++i) {
      stacked(i, k) = points[k][i];
    }
    stacked(p, k) = 1.0;
  }

  const auto echelon = full_pivot_echelon(std::move(stacked), kSingularPivotTolerance);
  const std::size_t nullity = m - echelon.rank;
  if (nullity != 1) {
    throw NullSpaceDimensionError(echelon.rank, nullity);
  }

  std::vector<double> lambda(m, 0.0);
  const std::size_t free_column = echelon.columns[m - 1];
  lambda[free_column] = 1.0;
  for (std::size_t i = 0; i < echelon.rank; ++i) {
    lambda[echelon.columns[i]] = -echelon.reduced(i, free_column);
  }

  double largest = 0.0;
  for (double v : lambda) {
    largest = std::max(largest, std::abs(v));
  }
  for (double v : lambda) {
    if (std::abs(v) > 1e-10 * largest) {
      if (v < 0.0) {
        for (double& w : lambda) {
          w = -w;
        }
      }
      break;
    }
  }
  double positive_sum = 0.0;
  for (double v : lambda) {
    if (v > 0.0) {
      positive_sum += v;
    }
  }
  for (double& v : lambda) {
    v /= positive_sum;
  }
  return lambda;
}

bool affine_independent(const PointList& points) {
  if (points.size() <= 1) {
    return true;
  }
  const std::size_t p = points.front().size();
  const std::size_t count = points.size() - 1;
  if (count > p) {
    return false;
  }
  DenseMatrix diffs(count, p);
  for (std::size_t i = 0; i < count; ++i) {
    if (points[i + 1].size() != p) {
      throw ContractViolation("affine_independent points have mixed dimensions");
    }
    for (std::size_t j = 0; j < p; ++j) {
      diffs(i, j) = points[i + 1][j] - points[0][j];
    }
  }
  const auto echelon = full_pivot_echelon(std::move(diffs), 1e-10);
  return echelon.rank == count;
}

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Internal column j contributes `sign * x'_j` to original variable `source`.
struct StructuralColumn {
  std::size_t source;
  double sign;
};

struct InternalRow {
  std::vector<double> coefficients;  // over structural columns
  Relation relation;
  double rhs;
  double flip = 1.0;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t width = cols_ + 1;
    double* prow = &t_[pr * width];
    const double inv = 1.0 / prow[pc];
    for (std::size_t c = 0; c < width; ++c) {
      prow[c] *= inv;
    }
    prow[pc] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) {
        continue;
      }
      double* row = &t_[r * width];
      const double factor = row[pc];
      if (factor == 0.0) {
        continue;
      }
      for (std::size_t c = 0; c < width; ++c) {
        row[c] -= factor * prow[c];
      }
      row[pc] = 0.0;
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
};

enum class LoopResult { Optimal, Unbounded };

class SimplexEngine {
 public:
  SimplexEngine(Tableau& tableau, std::vector<std::size_t>& basis, const SimplexOptions& options)
      : t_(tableau), basis_(basis), options_(options) {
    const std::size_t size = t_.rows() + t_.cols();
    pivot_limit_ = options.pivot_limit.value_or(50 * size);
    bland_after_ = options.bland_after.value_or(2 * size);
  }

  LoopResult run(std::size_t enterable_columns) {
    constexpr double kPivotTol = 1e-10;
    for (;;) {
      const bool bland = pivots_ >= bland_after_;
      std::size_t entering = enterable_columns;
      double best = -options_.optimality_tol;
      for (std::size_t c = 0; c < enterable_columns; ++c) {
        const double d = t_.cost(c);
        if (d < best) {
          entering = c;
          best = d;
          if (bland) {
            break;
          }
        }
      }
      if (entering == enterable_columns) {
        return LoopResult::Optimal;
      }

      std::size_t leaving = t_.rows();
      double best_ratio = std::numeric_limits<double>::infinity();
      double best_pivot = 0.0;
      for (std::size_t r = 0; r < t_.rows(); ++r) {
        const double a = t_.at(r, entering);
        if (a <= kPivotTol) {
          continue;
        }
        const double ratio = std::max(0.0, t_.rhs(r)) / a;
        const double slack = 1e-12 * std::max(1.0, best_ratio);
        bool take = false;
        if (leaving == t_.rows() || ratio < best_ratio - slack) {
          take = true;
        } else if (ratio <= best_ratio + slack) {
          take = bland ? basis_[r] < basis_[leaving] : a > best_pivot;
        }
        if (take) {
          leaving = r;
          best_ratio = ratio;
          best_pivot = a;
        }
      }
      if (leaving == t_.rows()) {
        return LoopResult::Unbounded;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    t_.pivot(row, col);
    basis_[row] = col;
    if (++pivots_ > pivot_limit_) {
      throw IterationLimit("simplex exceeded " + std::to_string(pivot_limit_) + " pivots");
    }
  }

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  Tableau& t_;
  std::vector<std::size_t>& basis_;
  const SimplexOptions& options_;
  std::size_t pivots_ = 0;
  std::size_t pivot_limit_ = 0;
  std::size_t bland_after_ = 0;
};

}  // namespace

LpSolution simplex_solve(const LpProblem& lp, const SimplexOptions& options) {
  const std::size_t nv = lp.objective.size();
  const std::size_t nr = lp.rhs.size();
  if (lp.constraints.rows() != nr || (nr > 0 && lp.constraints.cols() != nv)) {
    throw ContractViolation("LP constraint matrix shape does not match objective/rhs");
  }
  if (lp.relations.size() != nr) {
    throw ContractViolation("LP needs one relation per constraint row");
  }
  if (!lp.bounds.empty() && lp.bounds.size() != nv) {
    throw ContractViolation("LP needs one bound per variable");
  }
  auto bound_of = [&](std::size_t j) { return lp.bounds.empty() ? VariableBound{} : lp.bounds[j]; };

  LpSolution solution;

  // Map original variables onto non-negative structural columns.
  std::vector<StructuralColumn> structural;
  std::vector<double> offset(nv, 0.0);
  std::vector<std::pair<std::size_t, double>> upper_rows;  // (structural column, bound)
  for (std::size_t j = 0; j < nv; ++j) {
    const auto b = bound_of(j);
    const bool has_lower = std::isfinite(b.lower);
    const bool has_upper = std::isfinite(b.upper);
    if (has_lower && has_upper && b.upper < b.lower) {
      solution.status = LpStatus::Infeasible;
      return solution;
    }
    if (has_lower) {
      offset[j] = b.lower;
      structural.push_back({j, 1.0});
      if (has_upper) {
        upper_rows.emplace_back(structural.size() - 1, b.upper - b.lower);
      }
    } else if (has_upper) {
      offset[j] = b.upper;
      structural.push_back({j, -1.0});
    } else {
      structural.push_back({j, 1.0});
      structural.push_back({j, -1.0});
    }
  }
  const std::size_t ns = structural.size();

  std::vector<InternalRow> rows;
  rows.reserve(nr + upper_rows.size());
  for (std::size_t i = 0; i < nr; ++i) {
    InternalRow row{std::vector<double>(ns, 0.0), lp.relations[i], lp.rhs[i]};
    const auto a = lp.constraints.row(i);
    for (std::size_t s = 0; s < ns; ++s) {
      row.coefficients[s] = structural[s].sign * a[structural[s].source];
    }
    for (std::size_t j = 0; j < nv; ++j) {
      row.rhs -= a[j] * offset[j];
    }
    rows.push_back(std::move(row));
  }
  for (const auto& [s, ub] : upper_rows) {
    InternalRow row{std::vector<double>(ns, 0.0), Relation::LessEqual, ub};
    row.coefficients[s] = 1.0;
    rows.push_back(std::move(row));
  }
  double rhs_scale = 1.0;
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      row.flip = -1.0;
      row.rhs = -row.rhs;
      for (double& v : row.coefficients) {
        v = -v;
      }
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
    rhs_scale = std::max(rhs_scale, row.rhs);
  }

  const std::size_t m = rows.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    slack_count += row.relation != Relation::Equal ? 1 : 0;
    artificial_count += row.relation != Relation::LessEqual ? 1 : 0;
  }
  const std::size_t first_slack = ns;
  const std::size_t first_artificial = ns + slack_count;
  const std::size_t total_cols = first_artificial + artificial_count;

  Tableau t(m, total_cols);
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> unit_column(m);
  {
    std::size_t next_slack = first_slack;
    std::size_t next_artificial = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t s = 0; s < ns; ++s) {
        t.at(i, s) = rows[i].coefficients[s];
      }
      t.rhs(i) = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::LessEqual:
          t.at(i, next_slack) = 1.0;
          unit_column[i] = next_slack++;
          break;
        case Relation::GreaterEqual:
          t.at(i, next_slack++) = -1.0;
          t.at(i, next_artificial) = 1.0;
          unit_column[i] = next_artificial++;
          break;
        case Relation::Equal:
          t.at(i, next_artificial) = 1.0;
          unit_column[i] = next_artificial++;
          break;
      }
      basis[i] = unit_column[i];
    }
  }

  SimplexEngine engine(t, basis, options);

  if (artificial_count > 0) {
    for (std::size_t c = 0; c <= total_cols; ++c) {
      double d = (c >= first_artificial && c < total_cols) ? 1.0 : 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= first_artificial) {
          d -= t.at(i, c);
        }
      }
      t.at(m, c) = d;
    }
    engine.run(total_cols);
    const double infeasibility = -t.at(m, total_cols);
    if (infeasibility > options.feasibility_tol * rhs_scale) {
      solution.status = LpStatus::Infeasible;
      solution.pivots = engine.pivots();
      return solution;
    }
    // Drive zero-level artificials out of the basis where possible; rows with no
    // structural/slack entry are redundant and keep their artificial at zero.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < first_artificial) {
        continue;
      }
      std::size_t best_col = first_artificial;
      double best = 1e-9;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(i, c)) > best) {
          best = std::abs(t.at(i, c));
          best_col = c;
        }
      }
      if (best_col < first_artificial) {
        engine.pivot(i, best_col);
      }
    }
  }

  const double sense_sign = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  std::vector<double> cost(total_cols, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    cost[s] = sense_sign * structural[s].sign * lp.objective[structural[s].source];
  }
  for (std::size_t c = 0; c <= total_cols; ++c) {
    double d = c < total_cols ? cost[c] : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      d -= cost[basis[i]] * t.at(i, c);
    }
    t.at(m, c) = d;
  }
  if (engine.run(first_artificial) == LoopResult::Unbounded) {
    solution.status = LpStatus::Unbounded;
    solution.pivots = engine.pivots();
    return solution;
  }

  std::vector<double> internal(total_cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    internal[basis[i]] = t.rhs(i);
  }
  solution.status = LpStatus::Optimal;
  solution.x = offset;
  for (std::size_t s = 0; s < ns; ++s) {
    solution.x[structural[s].source] += structural[s].sign * internal[s];
  }
  solution.objective_value = 0.0;
  for (std::size_t j = 0; j < nv; ++j) {
    solution.objective_value += lp.objective[j] * solution.x[j];
  }
  solution.duals.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    solution.duals[i] = -sense_sign * rows[i].flip * t.cost(unit_column[i]);
  }
  solution.pivots = engine.pivots();
  return solution;
}

}  // namespace vpx
