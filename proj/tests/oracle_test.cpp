#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "vpx/oracle.hpp"

namespace vpx {
namespace {

using test::family_of;
using test::make_problem;
using test::x0;
using test::x1;

TEST(LpMinimax, TargetInSpan) {
  const auto problem = make_problem({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.3, 0.7}},
                                    [](auto x) { return 1.0 + 2.0 * x[0] - x[1]; }, family_of(2, {x0, x1}));
  const auto r = lp_minimax(problem);
  EXPECT_NEAR(r.sigma, 0.0, 1e-12);
  EXPECT_NEAR(r.coefficients[0], 1.0, 1e-9);
  EXPECT_NEAR(r.coefficients[1], 2.0, 1e-9);
  EXPECT_NEAR(r.coefficients[2], -1.0, 1e-9);
}

TEST(LpMinimax, SquareOnThreePoints) {
  const auto problem =
      make_problem({{-1.0}, {0.0}, {1.0}}, [](auto x) { return x[0] * x[0]; }, family_of(1, {x0}));
  const auto r = lp_minimax(problem);
  EXPECT_NEAR(r.sigma, 0.5, 1e-12);
  EXPECT_NEAR(r.coefficients[0], 0.5, 1e-12);
  EXPECT_NEAR(r.coefficients[1], 0.0, 1e-12);
}

// Best line for e^x on [-1, 1]: equioscillation at -1, t, 1 gives slope m = sinh(1) and t = ln m.
TEST(LpMinimax, ExpByLineMatchesEquioscillation) {
  const auto problem =
      make_problem(test::uniform_grid(1001), [](auto x) { return std::exp(x[0]); }, family_of(1, {x0}));
  const auto r = lp_minimax(problem);
  const double m = (std::exp(1.0) - std::exp(-1.0)) / 2.0;
  const double t = std::log(m);
  // e^{-1} - (a0 - m) = sigma, e^t - (a0 + m t) = -sigma.
  const double a0 = (std::exp(-1.0) + m + std::exp(t) - m * t) / 2.0;
  const double sigma = std::exp(-1.0) - a0 + m;
  EXPECT_NEAR(r.coefficients[1], m, 1e-6);
  EXPECT_NEAR(r.coefficients[0], a0, 1e-6);
  EXPECT_NEAR(r.sigma, sigma, 1e-6);
}

TEST(LpMinimax, NoRandomCoefficientsDoBetter) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n(0.0, 0.05);
  const auto problem = test::random_problem(2, 2, test::scattered(2, 200, rng), rng);
  const auto r = lp_minimax(problem);
  EXPECT_NEAR(deviation_profile(r.coefficients, problem).max_abs, r.sigma, 1e-9);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = r.coefficients;
    for (auto& c : a.a) {
      c += n(rng);
    }
    EXPECT_GE(deviation_profile(a, problem).max_abs, r.sigma - 1e-12);
  }
}

TEST(LpMinimax, SinglePoint) {
  const auto problem = make_problem({{0.5}}, [](auto) { return 3.0; }, family_of(1, {x0}));
  const auto r = lp_minimax(problem);
  EXPECT_NEAR(r.sigma, 0.0, 1e-12);
  EXPECT_NEAR(r.coefficients[0] + 0.5 * r.coefficients[1], 3.0, 1e-9);
}

}  // namespace
}  // namespace vpx
