#include "vpx/cli/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "vpx/bases.hpp"

namespace vpx::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxGridPoints = 1'000'000;

struct Context {
  const std::string& source;

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError(source + ": field '" + field + "': " + what);
  }

  const json& require(const json& object, const std::string& parent, const char* key) const {
    const auto it = object.find(key);
    if (it == object.end()) {
      const std::string where = parent.empty() ? "top level" : "'" + parent + "'";
      throw ParseError(source + ": missing required key '" + key + "' in " + where);
    }
    return *it;
  }

  const json& object(const json& value, const std::string& field) const {
    if (!value.is_object()) {
      fail(field, "expected an object");
    }
    return value;
  }

  const json& array(const json& value, const std::string& field) const {
    if (!value.is_array()) {
      fail(field, "expected an array");
    }
    return value;
  }

  double number(const json& value, const std::string& field) const {
    if (!value.is_number()) {
      fail(field, "expected a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
      fail(field, "expected a finite number");
    }
    return v;
  }

  std::uint64_t unsigned_integer(const json& value, const std::string& field) const {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
      fail(field, "expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
  }

  std::size_t positive_integer(const json& value, const std::string& field) const {
    const auto v = unsigned_integer(value, field);
    if (v == 0) {
      fail(field, "expected a positive integer");
    }
    return static_cast<std::size_t>(v);
  }

  std::string string(const json& value, const std::string& field) const {
    if (!value.is_string()) {
      fail(field, "expected a string");
    }
    return value.get<std::string>();
  }

  std::vector<double> numbers(const json& value, const std::string& field) const {
    array(value, field);
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
      out.push_back(number(value[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  Point point(const json& value, const std::string& field, std::size_t dim) const {
    auto p = numbers(value, field);
    if (p.size() != dim) {
      fail(field, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()));
    }
    return p;
  }
};

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) {
      what = what.substr(pos);
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Point> parse_grid(const Context& ctx, const json& grid, std::size_t dim) {
  ctx.object(grid, "grid");
  const bool cartesian = grid.contains("cartesian");
  const bool explicit_points = grid.contains("explicit");
  if (cartesian == explicit_points) {
    ctx.fail("grid", "expected exactly one of 'cartesian' or 'explicit'");
  }
  std::vector<Point> points;
  if (explicit_points) {
    const auto& list = ctx.array(grid["explicit"], "grid.explicit");
    for (std::size_t k = 0; k < list.size(); ++k) {
      points.push_back(ctx.point(list[k], "grid.explicit[" + std::to_string(k) + "]", dim));
    }
    return points;
  }

  const auto& axes = ctx.array(grid["cartesian"], "grid.cartesian");
  if (axes.size() != dim) {
    ctx.fail("grid.cartesian", "expected " + std::to_string(dim) + " axes, got " +
                                   std::to_string(axes.size()));
  }
  std::vector<std::vector<double>> coordinates(dim);
  std::size_t total = 1;
  for (std::size_t axis = 0; axis < dim; ++axis) {
    const std::string field = "grid.cartesian[" + std::to_string(axis) + "]";
    const auto& spec = ctx.object(axes[axis], field);
    const double lo = ctx.number(ctx.require(spec, field, "min"), field + ".min");
    const double hi = ctx.number(ctx.require(spec, field, "max"), field + ".max");
    const std::size_t count = ctx.positive_integer(ctx.require(spec, field, "count"), field + ".count");
    if (count > 1 && !(lo < hi)) {
      ctx.fail(field, "expected min < max");
    }
    if (count > kMaxGridPoints || total * count > kMaxGridPoints) {
      ctx.fail(field + ".count", "grid too large");
    }
    total *= count;
    for (std::size_t j = 0; j < count; ++j) {
      coordinates[axis].push_back(
          count == 1 ? lo
                     : (static_cast<double>(count - 1 - j) * lo + static_cast<double>(j) * hi) /
                           static_cast<double>(count - 1));
    }
  }
  // Row-major, axis 0 slowest.
  points.reserve(total);
  std::vector<std::size_t> digit(dim, 0);
  for (std::size_t k = 0; k < total; ++k) {
    Point p(dim);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      p[axis] = coordinates[axis][digit[axis]];
    }
    points.push_back(std::move(p));
    for (std::size_t axis = dim; axis-- > 0;) {
      if (++digit[axis] < coordinates[axis].size()) {
        break;
      }
      digit[axis] = 0;
    }
  }
  return points;
}

std::vector<double> parse_values(const Context& ctx, const json& function,
                                 const std::vector<Point>& points) {
  ctx.object(function, "function");
  const bool builtin = function.contains("builtin");
  const bool values = function.contains("values");
  if (builtin == values) {
    ctx.fail("function", "expected exactly one of 'builtin' or 'values'");
  }
  if (values) {
    auto out = ctx.numbers(function["values"], "function.values");
    if (out.size() != points.size()) {
      ctx.fail("function.values", "expected " + std::to_string(points.size()) +
                                      " values (one per grid point), got " +
                                      std::to_string(out.size()));
    }
    return out;
  }
  const auto name = ctx.string(function["builtin"], "function.builtin");
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const auto v = evaluate_builtin(name, p);
    if (!v) {
      ctx.fail("function.builtin",
               "unknown function '" + name + "' (expected exp, runge, product, abs-sum, sum-squares)");
    }
    out.push_back(*v);
  }
  return out;
}

bases::Expression parse_expression(const Context& ctx, const json& value, const std::string& field,
                                   std::size_t dim) {
  ctx.object(value, field);
  bases::Expression expr;
  expr.kind = ctx.string(ctx.require(value, field, "kind"), field + ".kind");
  if (value.contains("axis")) {
    expr.axis = static_cast<std::size_t>(ctx.unsigned_integer(value["axis"], field + ".axis"));
    if (expr.axis >= dim) {
      ctx.fail(field + ".axis", "axis outside dimension " + std::to_string(dim));
    }
  }
  if (value.contains("k")) {
    expr.k = ctx.number(value["k"], field + ".k");
  }
  if (value.contains("c")) {
    expr.c = ctx.number(value["c"], field + ".c");
  }
  if (value.contains("center")) {
    expr.center = ctx.point(value["center"], field + ".center", dim);
  } else if (expr.kind == "gaussian") {
    ctx.require(value, field, "center");
  }
  if (value.contains("exponents")) {
    const auto& list = ctx.array(value["exponents"], field + ".exponents");
    for (std::size_t i = 0; i < list.size(); ++i) {
      expr.exponents.push_back(static_cast<unsigned>(
          ctx.unsigned_integer(list[i], field + ".exponents[" + std::to_string(i) + "]")));
    }
    if (expr.exponents.size() != dim) {
      ctx.fail(field + ".exponents", "expected " + std::to_string(dim) + " entries");
    }
  } else if (expr.kind == "monomial") {
    ctx.require(value, field, "exponents");
  }
  return expr;
}

BasisFamily parse_basis(const Context& ctx, const json& basis, const DiscreteDomain& domain) {
  ctx.object(basis, "basis");
  const std::size_t dim = domain.dimension();
  const auto type = ctx.string(ctx.require(basis, "basis", "type"), "basis.type");
  try {
    if (type == "monomials") {
      const auto degree = ctx.positive_integer(ctx.require(basis, "basis", "degree"), "basis.degree");
      if (degree > 64) {
        ctx.fail("basis.degree", "degree too large");
      }
      return bases::monomials(dim, static_cast<unsigned>(degree));
    }
    if (type == "trig") {
      const auto harmonics =
          ctx.positive_integer(ctx.require(basis, "basis", "harmonics"), "basis.harmonics");
      if (harmonics > bases::kMaxFamilySize) {
        ctx.fail("basis.harmonics", "too many harmonics");
      }
      return bases::trigonometric(dim, static_cast<unsigned>(harmonics));
    }
    if (type == "gaussian") {
      const auto& list = ctx.array(ctx.require(basis, "basis", "centers"), "basis.centers");
      std::vector<Point> centers;
      for (std::size_t i = 0; i < list.size(); ++i) {
        centers.push_back(ctx.point(list[i], "basis.centers[" + std::to_string(i) + "]", dim));
      }
      if (centers.empty()) {
        ctx.fail("basis.centers", "expected at least one center");
      }
      const double c = basis.contains("c") ? ctx.number(basis["c"], "basis.c") : 1.0;
      return bases::gaussian_bumps(centers, c);
    }
    if (type == "expressions") {
      const auto& list = ctx.array(ctx.require(basis, "basis", "functions"), "basis.functions");
      if (list.empty()) {
        ctx.fail("basis.functions", "expected at least one function");
      }
      std::vector<bases::Expression> expressions;
      for (std::size_t i = 0; i < list.size(); ++i) {
        expressions.push_back(
            parse_expression(ctx, list[i], "basis.functions[" + std::to_string(i) + "]", dim));
      }
      return bases::custom(dim, expressions);
    }
    if (type == "tabulated") {
      const auto& table = ctx.array(ctx.require(basis, "basis", "values"), "basis.values");
      if (table.empty()) {
        ctx.fail("basis.values", "expected at least one column");
      }
      std::vector<std::vector<double>> columns;
      for (std::size_t i = 0; i < table.size(); ++i) {
        columns.push_back(ctx.numbers(table[i], "basis.values[" + std::to_string(i) + "]"));
      }
      std::vector<std::string> labels;
      if (basis.contains("labels")) {
        const auto& list = ctx.array(basis["labels"], "basis.labels");
        for (std::size_t i = 0; i < list.size(); ++i) {
          labels.push_back(ctx.string(list[i], "basis.labels[" + std::to_string(i) + "]"));
        }
      }
      return bases::tabulated(domain, std::move(labels), std::move(columns));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    ctx.fail("basis", e.what());
  }
  ctx.fail("basis.type",
           "unknown basis type '" + type + "' (expected monomials, trig, gaussian, expressions, tabulated)");
}

SolveOptions parse_options(const Context& ctx, const json& options) {
  ctx.object(options, "options");
  SolveOptions out;
  if (options.contains("tol")) {
    out.termination_tol = ctx.number(options["tol"], "options.tol");
    if (!(out.termination_tol > 0.0)) {
      ctx.fail("options.tol", "expected a positive number");
    }
  }
  if (options.contains("max_iterations")) {
    out.max_iterations =
        static_cast<std::size_t>(ctx.unsigned_integer(options["max_iterations"], "options.max_iterations"));
  }
  if (options.contains("seed")) {
    out.seed = ctx.unsigned_integer(options["seed"], "options.seed");
  }
  if (options.contains("retries")) {
    out.retries = static_cast<std::size_t>(ctx.unsigned_integer(options["retries"], "options.retries"));
  }
  if (options.contains("singular_policy")) {
    const auto policy = ctx.string(options["singular_policy"], "options.singular_policy");
    if (policy == "fail") {
      out.singularity_policy = SingularityPolicy::Fail;
    } else if (policy == "retry") {
      out.singularity_policy = SingularityPolicy::Retry;
    } else {
      ctx.fail("options.singular_policy", "expected 'fail' or 'retry'");
    }
  }
  return out;
}

}  // namespace

std::optional<double> evaluate_builtin(std::string_view name, std::span<const double> x) {
  if (name == "exp") {
    double s = 0.0;
    for (double v : x) {
      s += v;
    }
    return std::exp(s);
  }
  if (name == "runge") {
    double s = 0.0;
    for (double v : x) {
      s += v * v;
    }
    return 1.0 / (1.0 + 25.0 * s);
  }
  if (name == "product") {
    double p = 1.0;
    for (double v : x) {
      p *= v;
    }
    return p;
  }
  if (name == "abs-sum") {
    double s = 0.0;
    for (double v : x) {
      s += std::abs(v);
    }
    return s;
  }
  if (name == "sum-squares") {
    double s = 0.0;
    for (double v : x) {
      s += v * v;
    }
    return s;
  }
  return std::nullopt;
}

ProblemSpec parse_problem(std::string_view text, const std::string& source) {
  const Context ctx{source};
  const json root = parse_json(text, source);
  ctx.object(root, "(root)");

  const std::size_t dim = ctx.positive_integer(ctx.require(root, "", "dimension"), "dimension");
  const auto& grid = ctx.require(root, "", "grid");
  const auto& function = ctx.require(root, "", "function");
  const auto& basis = ctx.require(root, "", "basis");

  auto points = parse_grid(ctx, grid, dim);
  if (points.empty()) {
    ctx.fail("grid", "expected at least one point");
  }
  auto values = parse_values(ctx, function, points);
  std::optional<DiscreteDomain> domain;
  try {
    domain.emplace(std::move(points), std::move(values));
  } catch (const Error& e) {
    ctx.fail("grid", e.what());
  }
  auto family = parse_basis(ctx, basis, *domain);
  SolveOptions options;
  if (root.contains("options")) {
    options = parse_options(ctx, root["options"]);
  }
  return ProblemSpec{Problem(std::move(*domain), std::move(family)), options};
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  return parse_problem(read_file(path), path.string());
}

CoefficientVector parse_coefficients(std::string_view text, const std::string& source) {
  const Context ctx{source};
  const json root = parse_json(text, source);
  if (root.is_array()) {
    return CoefficientVector{ctx.numbers(root, "(root)")};
  }
  if (root.is_object()) {
    return CoefficientVector{ctx.numbers(ctx.require(root, "", "coefficients"), "coefficients")};
  }
  ctx.fail("(root)", "expected an array or an object with 'coefficients'");
}

CoefficientVector load_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path), path.string());
}

}  // namespace vpx::cli
