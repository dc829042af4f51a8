#include "vpx/bases.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "vpx/errors.hpp"

namespace vpx::bases {

namespace {

std::string variable_name(std::size_t dim, std::size_t axis) {
  if (dim <= 3) {
    return std::string(1, "xyz"[axis]);
  }
  return "x" + std::to_string(axis + 1);
}

std::string monomial_label(std::size_t dim, const std::vector<unsigned>& exponents) {
  std::string label;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) {
      continue;
    }
    if (!label.empty()) {
      label += '*';
    }
    label += variable_name(dim, i);
    if (exponents[i] > 1) {
      label += '^' + std::to_string(exponents[i]);
    }
  }
  return label;
}

double monomial_value(const std::vector<unsigned>& exponents, std::span<const double> x) {
  double value = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (unsigned e = 0; e < exponents[i]; ++e) {
      value *= x[i];
    }
  }
  return value;
}

void exponents_of_degree(std::size_t axis, unsigned remaining, std::vector<unsigned>& current,
                         std::vector<std::vector<unsigned>>& out) {
  if (axis + 1 == current.size()) {
    current[axis] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[axis] = e;
    exponents_of_degree(axis + 1, remaining - e, current, out);
  }
  current[axis] = 0;
}

// C(dim + degree, dim) - 1, saturating above the family cap.
std::size_t monomial_count(std::size_t dim, unsigned degree) {
  long double count = 1.0L;
  for (std::size_t i = 1; i <= dim; ++i) {
    count = count * static_cast<long double>(degree + i) / static_cast<long double>(i);
    if (count > 1e7L) {
      return kMaxFamilySize + 1;
    }
  }
  return static_cast<std::size_t>(std::llround(count)) - 1;
}

double squared_distance(std::span<const double> x, const std::vector<double>& center) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - center[i];
    s += d * d;
  }
  return s;
}

std::string format_number(double v) {
  std::string s = std::to_string(v);
  while (!s.empty() && s.back() == '0') {
    s.pop_back();
  }
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  return s;
}

}  // namespace

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t dim, unsigned total_degree) {
  if (dim == 0 || total_degree == 0) {
    throw ContractViolation("monomials need dim >= 1 and total_degree >= 1");
  }
  const std::size_t count = monomial_count(dim, total_degree);
  if (count > kMaxFamilySize) {
    throw BasisTooLarge("monomial family of dimension " + std::to_string(dim) + " and degree " +
                        std::to_string(total_degree) + " exceeds " +
                        std::to_string(kMaxFamilySize) + " functions");
  }
  std::vector<std::vector<unsigned>> out;
  out.reserve(count);
  std::vector<unsigned> current(dim, 0);
  for (unsigned degree = 1; degree <= total_degree; ++degree) {
    exponents_of_degree(0, degree, current, out);
  }
  return out;
}

BasisFamily monomials(std::size_t dim, unsigned total_degree) {
  std::vector<BasisFamily::Function> functions;
  for (auto& exponents : monomial_exponents(dim, total_degree)) {
    auto label = monomial_label(dim, exponents);
    functions.push_back({std::move(label), [e = std::move(exponents)](std::span<const double> x) {
                           return monomial_value(e, x);
                         }});
  }
  return BasisFamily(dim, std::move(functions));
}

BasisFamily trigonometric(std::size_t dim, unsigned harmonics) {
  if (dim == 0 || harmonics == 0) {
    throw ContractViolation("trigonometric family needs dim >= 1 and harmonics >= 1");
  }
  std::vector<Expression> expressions;
  for (std::size_t axis = 0; axis < dim; ++axis) {
    for (unsigned k = 1; k <= harmonics; ++k) {
      Expression expr;
      expr.axis = axis;
      expr.k = static_cast<double>(k);
      expr.kind = "sin";
      expressions.push_back(expr);
      expr.kind = "cos";
      expressions.push_back(expr);
    }
  }
  return custom(dim, expressions);
}

BasisFamily gaussian_bumps(const std::vector<Point>& centers, double c) {
  if (centers.empty()) {
    throw ContractViolation("gaussian family needs at least one center");
  }
  std::vector<Expression> expressions;
  for (const auto& center : centers) {
    Expression expr;
    expr.kind = "gaussian";
    expr.c = c;
    expr.center = center;
    expressions.push_back(std::move(expr));
  }
  return custom(centers.front().size(), expressions);
}

BasisFamily custom(std::size_t dim, const std::vector<Expression>& expressions) {
  std::vector<BasisFamily::Function> functions;
  for (const auto& expr : expressions) {
    if (expr.kind == "sin" || expr.kind == "cos") {
      if (expr.axis >= dim) {
        throw ContractViolation(expr.kind + " axis " + std::to_string(expr.axis) +
                                " outside dimension " + std::to_string(dim));
      }
      const std::string arg = (expr.k == 1.0 ? "" : format_number(expr.k) + "*") +
                              variable_name(dim, expr.axis);
      const std::size_t axis = expr.axis;
      const double k = expr.k;
      if (expr.kind == "sin") {
        functions.push_back({"sin(" + arg + ")", [axis, k](std::span<const double> x) {
                               return std::sin(k * x[axis]);
                             }});
      } else {
        functions.push_back({"cos(" + arg + ")", [axis, k](std::span<const double> x) {
                               return std::cos(k * x[axis]);
                             }});
      }
    } else if (expr.kind == "gaussian") {
      if (expr.center.size() != dim) {
        throw ContractViolation("gaussian center has dimension " +
                                std::to_string(expr.center.size()) + ", expected " +
                                std::to_string(dim));
      }
      std::string label = "gauss(c=" + format_number(expr.c) + ",mu=(";
      for (std::size_t i = 0; i < dim; ++i) {
        label += (i ? "," : "") + format_number(expr.center[i]);
      }
      label += "))";
      functions.push_back({std::move(label),
                           [center = expr.center, c = expr.c](std::span<const double> x) {
                             return std::exp(-c * squared_distance(x, center));
                           }});
    } else if (expr.kind == "monomial") {
      if (expr.exponents.size() != dim) {
        throw ContractViolation("monomial exponents must have one entry per axis");
      }
      functions.push_back({monomial_label(dim, expr.exponents),
                           [e = expr.exponents](std::span<const double> x) {
                             return monomial_value(e, x);
                           }});
    } else {
      throw UnknownFunction("unknown basis function '" + expr.kind + "'");
    }
  }
  if (functions.size() > kMaxFamilySize) {
    throw BasisTooLarge("custom family exceeds " + std::to_string(kMaxFamilySize) + " functions");
  }
  return BasisFamily(dim, std::move(functions));
}

BasisFamily tabulated(const DiscreteDomain& domain, std::vector<std::string> labels,
                      std::vector<std::vector<double>> columns) {
  if (columns.empty()) {
    throw ContractViolation("tabulated family needs at least one column");
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != domain.size()) {
      throw TableShapeMismatch("tabulated column " + std::to_string(i) + " has " +
                               std::to_string(columns[i].size()) + " values for " +
                               std::to_string(domain.size()) + " grid points");
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      labels.push_back("t" + std::to_string(i + 1));
    }
  }
  if (labels.size() != columns.size()) {
    throw TableShapeMismatch("tabulated family has " + std::to_string(labels.size()) +
                             " labels for " + std::to_string(columns.size()) + " columns");
  }

  struct Table {
    std::map<Point, std::size_t> row_of;
    std::vector<std::vector<double>> columns;
  };
  auto table = std::make_shared<Table>();
  for (std::size_t k = 0; k < domain.size(); ++k) {
    table->row_of.emplace(domain.points()[k], k);
  }
  table->columns = std::move(columns);

  std::vector<BasisFamily::Function> functions;
  for (std::size_t i = 0; i < table->columns.size(); ++i) {
    functions.push_back({labels[i], [table, i](std::span<const double> x) {
                           const auto it = table->row_of.find(Point(x.begin(), x.end()));
                           if (it == table->row_of.end()) {
                             throw ContractViolation(
                                 "tabulated basis evaluated off its grid");
                           }
                           return table->columns[i][it->second];
                         }});
  }
  return BasisFamily(domain.dimension(), std::move(functions));
}

}  // namespace vpx::bases
