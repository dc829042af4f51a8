#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vpx/core.hpp"
#include "vpx/numerics.hpp"

namespace vpx {

// n + 2 domain indices split into a positive set Y and a negative set Z, each kept ascending.
class SignedBasis {
 public:
  SignedBasis(std::vector<std::size_t> positive, std::vector<std::size_t> negative);

  const std::vector<std::size_t>& positive() const noexcept { return positive_; }
  const std::vector<std::size_t>& negative() const noexcept { return negative_; }
  std::size_t size() const noexcept { return positive_.size() + negative_.size(); }

  // Y rows first, then Z rows; sign +1 for Y and -1 for Z.
  std::vector<std::size_t> ordered_points() const;
  std::vector<int> ordered_signs() const;

  SignedBasis swapped() const { return SignedBasis(negative_, positive_); }

  // Same split, possibly with Y and Z exchanged.
  bool same_partition(const SignedBasis& other) const noexcept;

  bool operator==(const SignedBasis&) const = default;

 private:
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> negative_;
};

struct Interpolant {
  CoefficientVector coefficients;
  double sigma = 0.0;
  SignedBasis basis;
  // Set by normalize_sign when |sigma| <= 1e-12: f lies in the model span on the basis points.
  bool degenerate_zero = false;
};

struct LinearSystem {
  DenseMatrix matrix;
  std::vector<double> rhs;
  std::vector<std::size_t> row_points;
  std::vector<int> row_signs;
};

// Rows (1, g(x_k), s_k) with right-hand side f(x_k).
LinearSystem build_system(const SignedBasis& basis, const Problem& problem);

struct NonSingularityCheck {
  bool ok = false;
  std::string reason;
  // Position in ordered_points() of a point implicated in the failure, when one is known.
  std::optional<std::size_t> offending_position;
};

// Radon witness with exactly this partition plus affine independence of every leave-one-out subset.
NonSingularityCheck check_non_singular(const SignedBasis& basis, const Problem& problem);

Interpolant chebyshev_interpolant(const SignedBasis& basis, const Problem& problem);

Interpolant normalize_sign(Interpolant raw);

}  // namespace vpx
