#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vpx/core.hpp"
#include "vpx/geometry.hpp"
#include "vpx/interpolation.hpp"

namespace vpx {

enum class BasisSide { Positive, Negative };

const char* to_string(BasisSide side) noexcept;

struct EnteringPoint {
  std::size_t index = 0;
  int sign = 1;
};

// Lowest index among the points of largest |r_k|, provided |r_k| > sigma * (1 + tol) + tol.
std::optional<EnteringPoint> select_entering(const DeviationProfile& profile, double sigma,
                                             double tol);

// Every point exceeding the same threshold, by decreasing |r_k| then ascending index.
std::vector<EnteringPoint> entering_candidates(const DeviationProfile& profile, double sigma,
                                               double tol, std::size_t limit);

// One side of the basis with its old (Radon) and new (joined) convex weights, index-aligned.
struct WeightedSide {
  std::vector<std::size_t> indices;
  std::vector<double> old_weights;
  std::vector<double> new_weights;
};

struct LeavingChoice {
  double gamma = 0.0;
  // Joined side first, then the opposite side, in the order of their WeightedSide entries.
  std::vector<double> ratios;
  std::size_t leaving_index = 0;
  bool from_joined_side = true;
};

// gamma = min of new/old weight ratios over both sides; lowest domain index wins ties.
// Throws DegenerateExchange when entering_weight <= 1e-10.
LeavingChoice select_leaving(const WeightedSide& joined_side, const WeightedSide& other_side,
                             double entering_weight);

struct ExchangeRecord {
  std::size_t entering_index = 0;
  int entering_sign = 1;
  std::size_t leaving_index = 0;
  BasisSide leaving_side = BasisSide::Positive;
  double gamma = 0.0;
  double entering_weight = 0.0;
  double old_sigma = 0.0;
  double new_sigma = 0.0;
  std::vector<double> ratios;
};

struct ExchangeResult {
  SignedBasis basis;
  ExchangeRecord record;
  Interpolant interpolant;
};

// Brings `entering` (default: select_entering with tol 1e-9) into the basis of `interpolant`.
// Throws DegenerateExchange, SingularConfiguration, or NoProgress.
ExchangeResult exchange_step(const Interpolant& interpolant, const DeviationProfile& profile,
                             const Problem& problem,
                             std::optional<EnteringPoint> entering = std::nullopt);

}  // namespace vpx
