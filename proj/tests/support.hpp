#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vpx/bases.hpp"
#include "vpx/core.hpp"
#include "vpx/geometry.hpp"

namespace vpx::test {

using Target = std::function<double(std::span<const double>)>;

inline std::vector<Point> uniform_grid(std::size_t count, double lo = -1.0, double hi = 1.0) {
  std::vector<Point> points;
  for (std::size_t j = 0; j < count; ++j) {
    points.push_back({count == 1 ? lo
                                 : (static_cast<double>(count - 1 - j) * lo + static_cast<double>(j) * hi) /
                                       static_cast<double>(count - 1)});
  }
  return points;
}

// Row-major over the axes, axis 0 slowest.
inline std::vector<Point> square_grid(std::size_t dim, std::size_t count) {
  const auto axis = uniform_grid(count);
  std::vector<Point> points{{}};
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<Point> next;
    for (const auto& prefix : points) {
      for (const auto& c : axis) {
        auto p = prefix;
        p.push_back(c[0]);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

inline std::vector<Point> scattered(std::size_t dim, std::size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> points(count, Point(dim));
  for (auto& p : points) {
    for (auto& c : p) {
      c = u(rng);
    }
  }
  return points;
}

inline Problem make_problem(std::vector<Point> points, const Target& f, BasisFamily family) {
  std::vector<double> values;
  for (const auto& p : points) {
    values.push_back(f(p));
  }
  return Problem(DiscreteDomain(std::move(points), std::move(values)), std::move(family));
}

// Family from plain lambdas, labelled g1, g2, ...
inline BasisFamily family_of(std::size_t dim, std::vector<Target> functions) {
  std::vector<BasisFamily::Function> out;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    out.push_back({"g" + std::to_string(i + 1), std::move(functions[i])});
  }
  return BasisFamily(dim, std::move(out));
}

inline LiftedPoint lifted(std::vector<double> v, std::size_t source = 0) {
  return LiftedPoint{source, std::move(v)};
}

inline double x0(std::span<const double> x) { return x[0]; }
inline double x1(std::span<const double> x) { return x[1]; }

// Random smooth target with a little noise, as used by the randomized suites.
struct RandomTarget {
  std::vector<double> freq;
  std::vector<double> phase;
  double amp_exp = 0.0;
  std::vector<double> noise;

  double operator()(std::span<const double> x, std::size_t k) const {
    double s = 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += std::sin(freq[i] * x[i] + phase[i]);
      dot += 0.3 * x[i];
    }
    return s + amp_exp * std::exp(dot) + std::cos(freq[0] * x[0] * x[x.size() - 1]) + noise[k];
  }
};

inline Problem random_problem(std::size_t dim, unsigned degree, std::vector<Point> points,
                              std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RandomTarget target;
  for (std::size_t i = 0; i < dim; ++i) {
    target.freq.push_back(1.0 + 2.0 * std::abs(u(rng)));
    target.phase.push_back(3.0 * u(rng));
  }
  target.amp_exp = u(rng);
  std::vector<double> values;
  for (std::size_t k = 0; k < points.size(); ++k) {
    target.noise.push_back(1e-3 * u(rng));
    values.push_back(target(points[k], k));
  }
  return Problem(DiscreteDomain(std::move(points), std::move(values)), bases::monomials(dim, degree));
}

}  // namespace vpx::test
