#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vpx/core.hpp"

namespace vpx::bases {

// Largest family a constructor will build.
inline constexpr std::size_t kMaxFamilySize = 10000;

// Exponent vectors alpha with 1 <= |alpha| <= total_degree in graded-lexicographic order.
std::vector<std::vector<unsigned>> monomial_exponents(std::size_t dim, unsigned total_degree);

// All monomials x^alpha with 1 <= |alpha| <= total_degree, graded-lex; the constant is excluded.
BasisFamily monomials(std::size_t dim, unsigned total_degree);

// sin(k x_i), cos(k x_i) for every axis i and k = 1..harmonics.
BasisFamily trigonometric(std::size_t dim, unsigned harmonics);

// exp(-c ||x - center||^2) per center.
BasisFamily gaussian_bumps(const std::vector<Point>& centers, double c);

// One named expression of the built-in set.
//   "sin" / "cos": sin(k * x[axis]), cos(k * x[axis])
//   "gaussian":    exp(-c * ||x - center||^2)
//   "monomial":    prod x[i]^exponents[i]
struct Expression {
  std::string kind;
  std::size_t axis = 0;
  double k = 1.0;
  double c = 1.0;
  std::vector<double> center;
  std::vector<unsigned> exponents;
};

// Throws UnknownFunction for an unrecognized kind.
BasisFamily custom(std::size_t dim, const std::vector<Expression>& expressions);

// Table lookup bound to `domain`: columns[i][k] is g_i at domain point k.
// Throws TableShapeMismatch unless every column has one value per domain point.
BasisFamily tabulated(const DiscreteDomain& domain, std::vector<std::string> labels,
                      std::vector<std::vector<double>> columns);

}  // namespace vpx::bases
