#include "vpx/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "vpx/errors.hpp"

namespace vpx {

const char* to_string(BasisSide side) noexcept {
  return side == BasisSide::Positive ? "positive" : "negative";
}

namespace {

double entering_threshold(double sigma, double tol) { return sigma * (1.0 + tol) + tol; }

}  // namespace

std::optional<EnteringPoint> select_entering(const DeviationProfile& profile, double sigma,
                                             double tol) {
  if (profile.residuals.empty() || !(profile.max_abs > entering_threshold(sigma, tol))) {
    return std::nullopt;
  }
  const std::size_t k = profile.argmax_index;
  return EnteringPoint{k, profile.residuals[k] >= 0.0 ? 1 : -1};
}

std::vector<EnteringPoint> entering_candidates(const DeviationProfile& profile, double sigma,
                                               double tol, std::size_t limit) {
  const double threshold = entering_threshold(sigma, tol);
  std::vector<std::size_t> above;
  for (std::size_t k = 0; k < profile.residuals.size(); ++k) {
    if (std::abs(profile.residuals[k]) > threshold) {
      above.push_back(k);
    }
  }
  const auto by_deviation = [&](std::size_t a, std::size_t b) {
    const double ra = std::abs(profile.residuals[a]);
    const double rb = std::abs(profile.residuals[b]);
    return ra != rb ? ra > rb : a < b;
  };
  const std::size_t keep = std::min(limit, above.size());
  std::partial_sort(above.begin(), above.begin() + static_cast<std::ptrdiff_t>(keep), above.end(),
                    by_deviation);
  std::vector<EnteringPoint> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back({above[i], profile.residuals[above[i]] >= 0.0 ? 1 : -1});
  }
  return out;
}

LeavingChoice select_leaving(const WeightedSide& joined_side, const WeightedSide& other_side,
                             double entering_weight) {
  if (!(entering_weight > kDegenerateWeight)) {
    throw DegenerateExchange("entering weight " + std::to_string(entering_weight) +
                             " is not positive");
  }
  for (const auto* side : {&joined_side, &other_side}) {
    if (side->old_weights.size() != side->indices.size() ||
        side->new_weights.size() != side->indices.size()) {
      throw ContractViolation("weighted side has misaligned weights");
    }
  }

  LeavingChoice choice;
  choice.gamma = std::numeric_limits<double>::infinity();
  bool found = false;
  auto consider = [&](const WeightedSide& side, bool joined) {
    for (std::size_t i = 0; i < side.indices.size(); ++i) {
      // A zero old weight means the point carries no part of the witness: evict it at once.
      const double ratio =
          side.old_weights[i] > 0.0 ? side.new_weights[i] / side.old_weights[i] : 0.0;
      choice.ratios.push_back(ratio);
      const bool better = ratio < choice.gamma;
      const bool tie = ratio == choice.gamma && side.indices[i] < choice.leaving_index;
      if (!found || better || tie) {
        choice.gamma = ratio;
        choice.leaving_index = side.indices[i];
        choice.from_joined_side = joined;
        found = true;
      }
    }
  };
  consider(joined_side, true);
  consider(other_side, false);
  if (!found) {
    throw ContractViolation("select_leaving needs at least one basis point");
  }
  return choice;
}

namespace {

std::vector<std::size_t> without(std::vector<std::size_t> v, std::size_t value) {
  v.erase(std::remove(v.begin(), v.end(), value), v.end());
  return v;
}

}  // namespace

ExchangeResult exchange_step(const Interpolant& interpolant, const DeviationProfile& profile,
                             const Problem& problem, std::optional<EnteringPoint> entering) {
  if (!entering) {
    entering = select_entering(profile, interpolant.sigma, 1e-9);
  }
  if (!entering) {
    throw ContractViolation("exchange_step called with no point above the current deviation");
  }
  const SignedBasis& basis = interpolant.basis;
  const auto points = basis.ordered_points();
  if (std::find(points.begin(), points.end(), entering->index) != points.end()) {
    throw ContractViolation("entering point " + std::to_string(entering->index) +
                            " is already in the basis");
  }

  const auto lifted = lift_points(problem, points);
  const auto radon = radon_partition(lifted);
  std::map<std::size_t, double> old_weight;
  std::vector<std::size_t> radon_positive;
  for (std::size_t i = 0; i < radon.positive_indices.size(); ++i) {
    old_weight[points[radon.positive_indices[i]]] = radon.weights_pos[i];
    radon_positive.push_back(points[radon.positive_indices[i]]);
  }
  for (std::size_t i = 0; i < radon.negative_indices.size(); ++i) {
    old_weight[points[radon.negative_indices[i]]] = radon.weights_neg[i];
  }
  std::sort(radon_positive.begin(), radon_positive.end());
  if (radon_positive != basis.positive() && radon_positive != basis.negative()) {
    throw SingularConfiguration("basis partition differs from the Radon partition of its points");
  }

  // With sigma >= 0 the Y side carries residual +sigma, so the entering sign picks its side.
  const bool joins_positive = entering->sign > 0;
  const auto& joined = joins_positive ? basis.positive() : basis.negative();
  const auto& other = joins_positive ? basis.negative() : basis.positive();

  const auto join = interior_join_weights(lift_point(problem, entering->index),
                                          lift_points(problem, joined), lift_points(problem, other));

  WeightedSide joined_side{joined, {}, join.pos_weights};
  WeightedSide other_side{other, {}, join.neg_weights};
  for (std::size_t k : joined) {
    joined_side.old_weights.push_back(old_weight.at(k));
  }
  for (std::size_t k : other) {
    other_side.old_weights.push_back(old_weight.at(k));
  }
  const auto leaving = select_leaving(joined_side, other_side, join.entering_weight);

  std::vector<std::size_t> new_joined = joined;
  std::vector<std::size_t> new_other = other;
  if (leaving.from_joined_side) {
    new_joined = without(std::move(new_joined), leaving.leaving_index);
  } else {
    new_other = without(std::move(new_other), leaving.leaving_index);
  }
  new_joined.push_back(entering->index);
  if (new_other.empty()) {
    throw SingularConfiguration("exchange would empty one side of the basis");
  }
  SignedBasis next = joins_positive ? SignedBasis(new_joined, new_other)
                                    : SignedBasis(new_other, new_joined);

  const auto check = check_non_singular(next, problem);
  if (!check.ok) {
    throw SingularConfiguration("exchange produced a singular basis: " + check.reason);
  }

  ExchangeRecord record;
  record.entering_index = entering->index;
  record.entering_sign = entering->sign;
  record.leaving_index = leaving.leaving_index;
  record.leaving_side = (leaving.from_joined_side == joins_positive) ? BasisSide::Positive
                                                                      : BasisSide::Negative;
  record.gamma = leaving.gamma;
  record.entering_weight = join.entering_weight;
  record.old_sigma = interpolant.sigma;
  record.ratios = leaving.ratios;

  auto next_interpolant = chebyshev_interpolant(next, problem);
  record.new_sigma = next_interpolant.sigma;
  if (!(next_interpolant.sigma > interpolant.sigma)) {
    throw NoProgress("deviation did not increase: " + std::to_string(next_interpolant.sigma) +
                     " <= " + std::to_string(interpolant.sigma));
  }
  return {next_interpolant.basis, std::move(record), std::move(next_interpolant)};
}

}  // namespace vpx
