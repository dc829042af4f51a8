#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpx/core.hpp"
#include "vpx/exchange.hpp"
#include "vpx/geometry.hpp"
#include "vpx/interpolation.hpp"

namespace vpx {

enum class SingularityPolicy { Fail, Retry };

struct SolveOptions {
  std::size_t max_iterations = 500;
  double termination_tol = 1e-9;
  SingularityPolicy singularity_policy = SingularityPolicy::Retry;
  std::size_t retries = 8;
  std::uint64_t seed = 0;
};

enum class SolveStatus { OptimalCertified, IterationLimit, SingularBasis };

const char* to_string(SolveStatus status) noexcept;

// Convex weights u over G+ and v over G- whose weighted sums meet.
struct OptimalityCertificate {
  std::vector<std::size_t> e_plus;
  std::vector<std::size_t> e_minus;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> common_point;
  double residual = 0.0;
};

struct CertifyOutcome {
  std::optional<OptimalityCertificate> certificate;
  // Why certification was refused; empty when certified.
  std::string reason;
  std::optional<LpStatus> lp_status;

  explicit operator bool() const noexcept { return certificate.has_value(); }
};

struct SolveResult {
  CoefficientVector coefficients;
  double sigma = 0.0;
  SolveStatus status = SolveStatus::SingularBasis;
  std::vector<ExchangeRecord> iterations;
  // Deviation of every interpolant in order; strictly increasing.
  std::vector<double> sigma_history;
  // Basis of every interpolant in order, index-aligned with sigma_history.
  std::vector<SignedBasis> basis_history;
  std::optional<OptimalityCertificate> certificate;
  std::optional<SignedBasis> final_basis;
  std::string message;
};

// Residual bound accepted for a hull-intersection certificate.
inline constexpr double kCertificateResidualTol = 1e-8;

// Extreme-set tolerance used when certifying a solver result: the default tolerance widened to
// cover the termination slack max_abs - sigma <= termination_tol * (1 + sigma).
double certification_tolerance(double max_abs, double termination_tol) noexcept;

// Throws InsufficientPoints when the domain has fewer than n + 2 points, SingularBasis when no
// non-singular start is found.
SignedBasis initial_basis(const Problem& problem, const SolveOptions& options = {});

SolveResult solve_minimax(const Problem& problem, const SolveOptions& options = {});

// Extreme sets at `tol`, lifted, tested for hull intersection.
CertifyOutcome certify_optimality(const CoefficientVector& coefficients, const Problem& problem,
                                  double tol);

}  // namespace vpx
