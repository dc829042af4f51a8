#include <benchmark/benchmark.h>

#include <random>

#include "support.hpp"
#include "vpx/geometry.hpp"
#include "vpx/numerics.hpp"
#include "vpx/oracle.hpp"
#include "vpx/solver.hpp"

namespace {

using namespace vpx;

// range(0): dimension, range(1): degree
Problem bench_problem(const benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  return test::random_problem(dim, static_cast<unsigned>(state.range(1)), test::scattered(dim, 2000, rng), rng);
}

void BM_SolveMinimax(benchmark::State& state) {
  const auto problem = bench_problem(state);
  for (auto _ : state) {
    auto r = solve_minimax(problem);
    benchmark::DoNotOptimize(r.sigma);
  }
}
BENCHMARK(BM_SolveMinimax)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_LpMinimax(benchmark::State& state) {
  const auto problem = bench_problem(state);
  for (auto _ : state) {
    auto r = lp_minimax(problem);
    benchmark::DoNotOptimize(r.sigma);
  }
}
BENCHMARK(BM_LpMinimax)->Args({1, 3})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LpProblem lp;
  lp.sense = Sense::Maximize;
  lp.constraints = DenseMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      lp.constraints(r, c) = u(rng);
    }
    lp.relations.push_back(Relation::LessEqual);
    lp.rhs.push_back(1.0 + u(rng));
    lp.objective.push_back(u(rng));
  }
  for (auto _ : state) {
    auto s = simplex_solve(lp);
    benchmark::DoNotOptimize(s.objective_value);
  }
}
BENCHMARK(BM_Simplex)->Arg(10)->Arg(40)->Arg(160);

void BM_RadonPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<LiftedPoint> pts(n + 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i].source_index = i;
    pts[i].vector.resize(n);
    for (auto& c : pts[i].vector) {
      c = u(rng);
    }
  }
  for (auto _ : state) {
    auto r = radon_partition(pts);
    benchmark::DoNotOptimize(r.radon_point.data());
  }
}
BENCHMARK(BM_RadonPartition)->Arg(2)->Arg(8)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
