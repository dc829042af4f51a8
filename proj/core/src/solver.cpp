#include "vpx/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "vpx/errors.hpp"

namespace vpx {

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::OptimalCertified:
      return "optimal-certified";
    case SolveStatus::IterationLimit:
      return "iteration-limit";
    case SolveStatus::SingularBasis:
      return "singular-basis";
  }
  return "unknown";
}

double certification_tolerance(double max_abs, double termination_tol) noexcept {
  return std::max(default_extreme_tolerance(max_abs), 2.0 * termination_tol * (1.0 + max_abs));
}

namespace {

// Greedy volume maximization: pivoted Gram-Schmidt over the lifted rows (1, g(x_k)).
std::vector<std::size_t> max_volume_simplex(const Problem& problem) {
  const std::size_t width = problem.basis_size() + 1;
  const std::size_t count = problem.size();
  std::vector<double> rows(count * width);
  double initial_max = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto lifted = problem.lifted(k);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < width; ++i) {
      rows[k * width + i] = lifted[i];
      norm2 += lifted[i] * lifted[i];
    }
    initial_max = std::max(initial_max, norm2);
  }

  std::vector<std::size_t> selected;
  std::vector<bool> taken(count, false);
  std::vector<double> q(width);
  for (std::size_t step = 0; step < width; ++step) {
    std::size_t best = count;
    double best_norm2 = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      if (taken[k]) {
        continue;
      }
      double norm2 = 0.0;
      for (std::size_t i = 0; i < width; ++i) {
        norm2 += rows[k * width + i] * rows[k * width + i];
      }
      if (norm2 > best_norm2) {
        best = k;
        best_norm2 = norm2;
      }
    }
    if (best == count || best_norm2 <= 1e-20 * initial_max) {
      throw SingularBasis("lifted points span fewer than n + 1 dimensions; no non-singular basis exists");
    }
    const double norm = std::sqrt(best_norm2);
    for (std::size_t i = 0; i < width; ++i) {
      q[i] = rows[best * width + i] / norm;
    }
    for (std::size_t k = 0; k < count; ++k) {
      if (taken[k] || k == best) {
        continue;
      }
      double proj = 0.0;
      for (std::size_t i = 0; i < width; ++i) {
        proj += rows[k * width + i] * q[i];
      }
      for (std::size_t i = 0; i < width; ++i) {
        rows[k * width + i] -= proj * q[i];
      }
    }
    taken[best] = true;
    selected.push_back(best);
  }
  return selected;
}

// Point whose barycentric coordinates against `simplex` have the largest smallest magnitude.
std::size_t most_interior_completion(const Problem& problem, const std::vector<std::size_t>& simplex) {
  const std::size_t width = problem.basis_size() + 1;
  DenseMatrix s(width, width);
  for (std::size_t c = 0; c < width; ++c) {
    const auto lifted = problem.lifted(simplex[c]);
    for (std::size_t r = 0; r < width; ++r) {
      s(r, c) = lifted[r];
    }
  }
  // Rows of the inverse, one solve per unit vector.
  DenseMatrix inverse(width, width);
  std::vector<double> unit(width, 0.0);
  for (std::size_t c = 0; c < width; ++c) {
    unit.assign(width, 0.0);
    unit[c] = 1.0;
    const auto column = solve_dense(s, unit);
    for (std::size_t r = 0; r < width; ++r) {
      inverse(r, c) = column[r];
    }
  }

  std::size_t best = problem.size();
  double best_score = -1.0;
  for (std::size_t k = 0; k < problem.size(); ++k) {
    if (std::find(simplex.begin(), simplex.end(), k) != simplex.end()) {
      continue;
    }
    const auto barycentric = inverse.multiply(problem.lifted(k));
    double score = std::numeric_limits<double>::infinity();
    for (double b : barycentric) {
      score = std::min(score, std::abs(b));
    }
    if (score > best_score) {
      best_score = score;
      best = k;
    }
  }
  return best;
}

struct Attempt {
  std::optional<SignedBasis> basis;
  std::optional<std::size_t> offending_position;
  std::string reason;
};

Attempt partition_points(const Problem& problem, const std::vector<std::size_t>& points) {
  Attempt attempt;
  const auto lifted = lift_points(problem, points);
  try {
    const auto radon = radon_partition(lifted);
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t i : radon.positive_indices) {
      pos.push_back(points[i]);
    }
    for (std::size_t i : radon.negative_indices) {
      neg.push_back(points[i]);
    }
    SignedBasis candidate(std::move(pos), std::move(neg));
    const auto check = check_non_singular(candidate, problem);
    if (check.ok) {
      attempt.basis = std::move(candidate);
      return attempt;
    }
    attempt.reason = check.reason;
    if (check.offending_position) {
      attempt.offending_position =
          std::find(points.begin(), points.end(), candidate.ordered_points()[*check.offending_position]) -
          points.begin();
    }
  } catch (const SingularConfiguration& e) {
    attempt.reason = e.what();
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
      attempt.offending_position = smallest;
    } catch (const NullSpaceDimensionError&) {
    }
  }
  return attempt;
}

}  // namespace

SignedBasis initial_basis(const Problem& problem, const SolveOptions& options) {
  const std::size_t n = problem.basis_size();
  if (problem.size() < n + 2) {
    throw InsufficientPoints("domain has " + std::to_string(problem.size()) +
                             " points; a basis needs n + 2 = " + std::to_string(n + 2));
  }
  auto points = max_volume_simplex(problem);
  points.push_back(most_interior_completion(problem, points));

  auto attempt = partition_points(problem, points);
  if (attempt.basis) {
    return *attempt.basis;
  }
  if (options.singularity_policy == SingularityPolicy::Retry) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t retry = 0; retry < options.retries; ++retry) {
      const std::size_t position = attempt.offending_position.value_or(
          std::uniform_int_distribution<std::size_t>(0, points.size() - 1)(rng));
      std::size_t replacement = 0;
      do {
        replacement = std::uniform_int_distribution<std::size_t>(0, problem.size() - 1)(rng);
      } while (std::find(points.begin(), points.end(), replacement) != points.end());
      points[position] = replacement;
      attempt = partition_points(problem, points);
      if (attempt.basis) {
        return *attempt.basis;
      }
    }
  }
  throw SingularBasis("no non-singular initial basis: " + attempt.reason);
}

CertifyOutcome certify_optimality(const CoefficientVector& coefficients, const Problem& problem,
                                  double tol) {
  const auto profile = deviation_profile(coefficients, problem);
  const auto sets = extreme_sets(profile, tol);
  CertifyOutcome outcome;
  if (sets.plus.empty() || sets.minus.empty()) {
    outcome.reason = sets.plus.empty() ? "empty extreme set: E+ is empty"
                                       : "empty extreme set: E- is empty";
    return outcome;
  }
  const auto g_plus = lift_points(problem, sets.plus);
  const auto g_minus = lift_points(problem, sets.minus);
  auto hull = hulls_intersect(g_plus, g_minus, kCertificateResidualTol);
  outcome.lp_status = hull.lp_status;
  if (!hull) {
    outcome.reason = hull.lp_status == LpStatus::Optimal
                         ? "hull intersection residual " + std::to_string(hull.residual) +
                               " exceeds tolerance"
                         : std::string("convex hulls of G+ and G- are separated (LP ") +
                               to_string(hull.lp_status) + ")";
    return outcome;
  }
  outcome.certificate = OptimalityCertificate{sets.plus,          sets.minus,
                                              std::move(hull.u),  std::move(hull.v),
                                              std::move(hull.common_point), hull.residual};
  return outcome;
}

SolveResult solve_minimax(const Problem& problem, const SolveOptions& options) {
  if (!(options.termination_tol > 0.0)) {
    throw ContractViolation("termination tolerance must be positive");
  }
  SolveResult result;

  std::optional<Interpolant> current;
  try {
    current = chebyshev_interpolant(initial_basis(problem, options), problem);
  } catch (const SingularBasis& e) {
    result.status = SolveStatus::SingularBasis;
    result.message = e.what();
    result.coefficients.a.assign(problem.basis_size() + 1, 0.0);
    return result;
  } catch (const VerificationFailure& e) {
    result.status = SolveStatus::SingularBasis;
    result.message = e.what();
    result.coefficients.a.assign(problem.basis_size() + 1, 0.0);
    return result;
  }
  result.sigma_history.push_back(current->sigma);
  result.basis_history.push_back(current->basis);

  auto finish = [&](SolveStatus status) {
    result.status = status;
    result.coefficients = current->coefficients;
    result.sigma = current->sigma;
    result.final_basis = current->basis;
    return result;
  };

  const bool retry = options.singularity_policy == SingularityPolicy::Retry;
  std::mt19937_64 rng(options.seed);
  for (std::size_t iteration = 0;; ++iteration) {
    const auto profile = deviation_profile(current->coefficients, problem);
    auto candidates = entering_candidates(profile, current->sigma, options.termination_tol,
                                          retry ? problem.size() : 1);
    // The largest deviation enters first; retries draw from the remaining candidates at random,
    // since near neighbours of a failed candidate tend to reproduce the same degenerate tie.
    if (candidates.size() > 1) {
      std::shuffle(candidates.begin() + 1, candidates.end(), rng);
      candidates.resize(std::min(candidates.size(), options.retries + 1));
    }
    if (candidates.empty()) {
      auto outcome = certify_optimality(
          current->coefficients, problem,
          certification_tolerance(profile.max_abs, options.termination_tol));
      if (outcome.certificate) {
        result.certificate = std::move(outcome.certificate);
        return finish(SolveStatus::OptimalCertified);
      }
      result.message = "terminated without certificate: " + outcome.reason;
      return finish(SolveStatus::SingularBasis);
    }
    if (iteration == options.max_iterations) {
      result.message = "reached " + std::to_string(options.max_iterations) + " iterations";
      return finish(SolveStatus::IterationLimit);
    }

    std::optional<ExchangeResult> step;
    std::string failure;
    for (const auto& candidate : candidates) {
      try {
        step = exchange_step(*current, profile, problem, candidate);
        break;
      } catch (const ContractViolation&) {
        throw;
      } catch (const Error& e) {
        if (!failure.empty()) {
          failure += "; ";
        }
        failure += "entering " + std::to_string(candidate.index) + ": " + e.what();
      }
    }
    if (!step) {
      result.message = "exchange failed: " + failure;
      return finish(SolveStatus::SingularBasis);
    }
    result.iterations.push_back(std::move(step->record));
    result.sigma_history.push_back(step->interpolant.sigma);
    result.basis_history.push_back(step->interpolant.basis);
    current = std::move(step->interpolant);
  }
}

}  // namespace vpx
