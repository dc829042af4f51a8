#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vpx/cli/app.hpp"
#include "vpx/cli/problem_file.hpp"
#include "vpx/cli/report.hpp"
#include "vpx/errors.hpp"

namespace vpx::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = VPX_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run vpx(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("vpx_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const char* name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1e-20), "1e-20");
  EXPECT_EQ(format_double(std::nan("")), "null");
  for (double v : {0.27880152908901211, 4.520545488972259e-05, 1.0 / 3.0, -2.5e300}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(ProblemFile, CartesianOrderingIsRowMajor) {
  const auto spec = parse_problem(R"({
    "dimension": 2,
    "grid": {"cartesian": [{"min": 0, "max": 1, "count": 2}, {"min": -1, "max": 1, "count": 3}]},
    "function": {"builtin": "product"},
    "basis": {"type": "monomials", "degree": 1}
  })", "inline");
  const auto& pts = spec.problem.domain().points();
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0], (Point{0.0, -1.0}));
  EXPECT_EQ(pts[1], (Point{0.0, 0.0}));
  EXPECT_EQ(pts[2], (Point{0.0, 1.0}));
  EXPECT_EQ(pts[3], (Point{1.0, -1.0}));
  EXPECT_EQ(spec.problem.domain().value(5), 1.0);
}

TEST(ProblemFile, BasisKinds) {
  const auto trig = parse_problem(R"({"dimension": 1, "grid": {"explicit": [[0], [1], [2], [3]]},
    "function": {"values": [1, 2, 3, 4]}, "basis": {"type": "trig", "harmonics": 1}})", "t");
  EXPECT_EQ(trig.problem.basis_size(), 2u);
  const auto gauss = parse_problem(R"({"dimension": 1, "grid": {"explicit": [[0], [1], [2]]},
    "function": {"builtin": "runge"}, "basis": {"type": "gaussian", "centers": [[0], [1]], "c": 2}})", "g");
  EXPECT_EQ(gauss.problem.basis_size(), 2u);
  EXPECT_DOUBLE_EQ(gauss.problem.lifted(1)[1], std::exp(-2.0));
  const auto expr = parse_problem(R"({"dimension": 2, "grid": {"explicit": [[0, 0], [1, 2]]},
    "function": {"builtin": "abs-sum"},
    "basis": {"type": "expressions", "functions": [{"kind": "cos", "axis": 1, "k": 2},
                                                  {"kind": "monomial", "exponents": [1, 1]}]}})", "e");
  EXPECT_DOUBLE_EQ(expr.problem.lifted(1)[1], std::cos(4.0));
  EXPECT_EQ(expr.problem.lifted(1)[2], 2.0);
  EXPECT_EQ(expr.problem.domain().value(1), 3.0);
  const auto table = parse_problem(R"({"dimension": 1, "grid": {"explicit": [[0], [1], [2]]},
    "function": {"builtin": "exp"}, "basis": {"type": "tabulated", "labels": ["t"], "values": [[5, 6, 7]]},
    "options": {"tol": 1e-7, "max_iterations": 9, "seed": 3, "singular_policy": "fail", "retries": 2}})", "tab");
  EXPECT_EQ(table.problem.lifted(2)[1], 7.0);
  EXPECT_EQ(table.options.max_iterations, 9u);
  EXPECT_EQ(table.options.seed, 3u);
  EXPECT_EQ(table.options.retries, 2u);
  EXPECT_EQ(table.options.termination_tol, 1e-7);
  EXPECT_EQ(table.options.singularity_policy, SingularityPolicy::Fail);
}

void expect_parse_error(const std::string& text, const std::string& needle) {
  try {
    parse_problem(text, "p.json");
    FAIL() << "expected a parse error mentioning " << needle;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(ProblemFile, Diagnostics) {
  expect_parse_error("{\n  \"dimension\": 1,\n  oops\n}", "p.json:3:3");
  expect_parse_error(R"({"dimension": 1, "function": {"builtin": "exp"}, "basis": {"type": "monomials", "degree": 1}})",
                     "missing required key 'grid'");
  expect_parse_error(R"({"dimension": 1, "grid": {"cartesian": [{"min": 0, "max": 1}]},
    "function": {"builtin": "exp"}, "basis": {"type": "monomials", "degree": 1}})", "'count'");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"builtin": "sinc"},
    "basis": {"type": "monomials", "degree": 1}})", "function.builtin");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"values": [1]},
    "basis": {"type": "monomials", "degree": 1}})", "function.values");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"values": [1, 2]},
    "basis": {"type": "splines"}})", "basis.type");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"values": [1, 2]},
    "basis": {"type": "tabulated", "values": [[1, 2, 3]]}})", "field 'basis'");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"values": [1, 2]},
    "basis": {"type": "expressions", "functions": [{"kind": "tanh"}]}})", "unknown basis function");
  expect_parse_error(R"({"dimension": 2, "grid": {"explicit": [[0, 1], [1]]}, "function": {"values": [1, 2]},
    "basis": {"type": "monomials", "degree": 1}})", "grid.explicit[1]");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [0]]}, "function": {"values": [1, 2]},
    "basis": {"type": "monomials", "degree": 1}})", "duplicate");
  expect_parse_error(R"({"dimension": 1, "grid": {"explicit": [[0], [1]]}, "function": {"values": [1, 2]},
    "basis": {"type": "monomials", "degree": 1}, "options": {"singular_policy": "ignore"}})",
                     "options.singular_policy");
}

TEST(Coefficients, ArrayOrReport) {
  EXPECT_EQ(parse_coefficients("[1, 2.5]", "c").a, (std::vector<double>{1.0, 2.5}));
  EXPECT_EQ(parse_coefficients(R"({"status": "x", "coefficients": [0.5, 0]})", "c").a,
            (std::vector<double>{0.5, 0.0}));
  EXPECT_THROW(parse_coefficients(R"({"sigma": 1})", "c"), ParseError);
  EXPECT_THROW(parse_coefficients("3", "c"), ParseError);
}

TEST(Solve, SquareReport) {
  const auto r = vpx({"solve", data("square_linear.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["status"], "optimal-certified");
  EXPECT_EQ(report["sigma"].get<double>(), 0.5);
  EXPECT_EQ(report["coefficients"], nlohmann::json::parse("[0.5, 0]"));
  EXPECT_TRUE(report["iterations"].is_array());
  EXPECT_TRUE(report["certificate"].is_object());
}

TEST(Solve, MissingGridSection) {
  const auto r = vpx({"solve", data("missing_grid.json")});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("'grid'"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Solve, MalformedNamesLine) {
  const auto r = vpx({"solve", data("malformed.json")});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("malformed.json:3:"), std::string::npos) << r.err;
}

TEST(Solve, ExitCodesForStatuses) {
  EXPECT_EQ(vpx({"solve", data("exp_quintic.json"), "--max-iter", "1"}).code, kExitIterationLimit);
  EXPECT_EQ(vpx({"solve", data("collinear.json")}).code, kExitSingularBasis);
  EXPECT_EQ(vpx({"solve", data("collinear.json"), "--singular-policy", "retry"}).code, kExitSingularBasis);
  EXPECT_EQ(vpx({"solve", data("square_linear.json"), "--singular-policy", "maybe"}).code, kExitInvalidInput);
  EXPECT_EQ(vpx({"solve", (kData / "absent.json").string()}).code, kExitInvalidInput);
  EXPECT_EQ(vpx({}).code, kExitInvalidInput);
}

TEST(Solve, MatchesOracleOnExpQuintic) {
  const auto solve = nlohmann::json::parse(vpx({"solve", data("exp_quintic.json")}).out);
  const auto oracle = nlohmann::json::parse(vpx({"oracle", data("exp_quintic.json")}).out);
  EXPECT_NEAR(solve["sigma"].get<double>(), oracle["sigma"].get<double>(), 1e-8);
}

TEST(Solve, ByteIdenticalAcrossRuns) {
  TempDir dir;
  for (const char* name : {"exp_quintic.json", "product_bilinear.json", "exp_linear.json"}) {
    const auto a = vpx({"solve", data(name), "--seed", "7", "--out", (dir / "a.json").string()});
    const auto b = vpx({"solve", data(name), "--seed", "7", "--out", (dir / "b.json").string()});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    std::ifstream fa(dir / "a.json");
    std::ifstream fb(dir / "b.json");
    std::stringstream sa;
    std::stringstream sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_FALSE(sa.str().empty());
    EXPECT_EQ(sa.str(), sb.str());
  }
}

TEST(Oracle, Reports) {
  const auto r = vpx({"oracle", data("in_span.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["sigma"].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(vpx({"oracle", data("malformed.json")}).code, kExitInvalidInput);
  const auto sq = nlohmann::json::parse(vpx({"oracle", data("square_linear.json")}).out);
  EXPECT_NEAR(sq["sigma"].get<double>(), 0.5, 1e-12);
  const auto xy = nlohmann::json::parse(vpx({"oracle", data("product_bilinear.json")}).out);
  EXPECT_NEAR(xy["sigma"].get<double>(), 1.0, 1e-9);
}

TEST(Certify, OptimalAndRefused) {
  TempDir dir;
  write_file(dir / "best.json", "[0.5, 0]");
  write_file(dir / "zero.json", "[0, 0]");
  write_file(dir / "short.json", "[0.5]");
  const auto ok = vpx({"certify", data("square_linear.json"), (dir / "best.json").string()});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["status"], "certified");
  const auto refused = vpx({"certify", data("square_linear.json"), (dir / "zero.json").string()});
  EXPECT_EQ(refused.code, kExitRefused);
  const auto report = nlohmann::json::parse(refused.out);
  EXPECT_EQ(report["status"], "refused");
  EXPECT_NE(report["reason"].get<std::string>().find("E-"), std::string::npos);
  const auto bad = vpx({"certify", data("square_linear.json"), (dir / "short.json").string()});
  EXPECT_EQ(bad.code, kExitInvalidInput);
  EXPECT_NE(bad.err.find("coefficients"), std::string::npos);
}

TEST(Certify, RoundTripFromSolveReport) {
  TempDir dir;
  for (const char* name : {"square_linear.json", "product_bilinear.json", "exp_linear.json", "exp_quintic.json",
                           "in_span.json"}) {
    const auto report = dir / "report.json";
    ASSERT_EQ(vpx({"solve", data(name), "--out", report.string()}).code, 0) << name;
    const auto c = vpx({"certify", data(name), report.string()});
    EXPECT_EQ(c.code, kExitOk) << name << c.out;
  }
}

TEST(Compare, TableRows) {
  const auto r = vpx({"compare", data("square_linear.json"), data("exp_linear.json"), data("exp_quintic.json"),
                      data("collinear.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "problem\tstatus\tsolver_sigma\toracle_sigma\tabs_delta\titerations\twall_ms");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, '\t');) {
      cells.push_back(cell);
    }
    ASSERT_EQ(cells.size(), 7u) << line;
    if (cells[0].find("collinear") != std::string::npos) {
      EXPECT_EQ(cells[1], "singular-basis");
      EXPECT_EQ(cells[4], "null");
    } else {
      EXPECT_EQ(cells[1], "optimal-certified");
      EXPECT_LE(std::stod(cells[4]), 1e-8);
    }
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Compare, EmptyCorpus) {
  TempDir dir;
  const auto r = vpx({"compare", dir.path().string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "problem\tstatus\tsolver_sigma\toracle_sigma\tabs_delta\titerations\twall_ms\n");
}

TEST(Compare, DirectoryExpansionIsSorted) {
  TempDir dir;
  fs::copy_file(data("square_linear.json"), dir / "b.json");
  fs::copy_file(data("in_span.json"), dir / "a.json");
  write_file(dir / "notes.txt", "ignored");
  const auto r = vpx({"compare", dir.path().string()});
  ASSERT_EQ(r.code, 0);
  const auto a = r.out.find("a.json");
  const auto b = r.out.find("b.json");
  ASSERT_NE(a, std::string::npos);
  ASSERT_NE(b, std::string::npos);
  EXPECT_LT(a, b);
  EXPECT_EQ(r.out.find("notes.txt"), std::string::npos);
}

}  // namespace
}  // namespace vpx::cli
