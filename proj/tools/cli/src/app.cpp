#include "vpx/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "vpx/cli/problem_file.hpp"
#include "vpx/cli/report.hpp"
#include "vpx/errors.hpp"
#include "vpx/oracle.hpp"
#include "vpx/solver.hpp"

namespace vpx::cli {

namespace {

namespace fs = std::filesystem;

struct Flags {
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> policy;
  std::string out;
};

void add_common_flags(CLI::App& command, Flags& flags) {
  command.add_option("--tol", flags.tol, "termination tolerance (certify: extreme-set tolerance)")
      ->check(CLI::PositiveNumber);
  command.add_option("--max-iter", flags.max_iter, "exchange iteration cap");
  command.add_option("--seed", flags.seed, "seed for singularity retries");
  command.add_option("--singular-policy", flags.policy, "fail or retry")
      ->check(CLI::IsMember({"fail", "retry"}));
  command.add_option("--out", flags.out, "write the report to FILE instead of stdout");
}

SolveOptions merged_options(SolveOptions options, const Flags& flags) {
  if (flags.tol) {
    options.termination_tol = *flags.tol;
  }
  if (flags.max_iter) {
    options.max_iterations = *flags.max_iter;
  }
  if (flags.seed) {
    options.seed = *flags.seed;
  }
  if (flags.policy) {
    options.singularity_policy = *flags.policy == "fail" ? SingularityPolicy::Fail : SingularityPolicy::Retry;
  }
  return options;
}

void emit(const std::string& text, const Flags& flags, std::ostream& out) {
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file || !(file << text)) {
    throw Error("cannot write " + flags.out);
  }
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::OptimalCertified:
      return kExitOk;
    case SolveStatus::IterationLimit:
      return kExitIterationLimit;
    case SolveStatus::SingularBasis:
      return kExitSingularBasis;
  }
  return kExitInvalidInput;
}

int cmd_solve(const std::string& path, const Flags& flags, std::ostream& out) {
  const auto spec = load_problem(path);
  const auto result = solve_minimax(spec.problem, merged_options(spec.options, flags));
  emit(serialize(solve_report(result, spec.problem)), flags, out);
  return exit_code(result.status);
}

int cmd_oracle(const std::string& path, const Flags& flags, std::ostream& out) {
  const auto spec = load_problem(path);
  emit(serialize(oracle_report(lp_minimax(spec.problem), spec.problem)), flags, out);
  return kExitOk;
}

int cmd_certify(const std::string& path, const std::string& coefficients_path, const Flags& flags,
                std::ostream& out) {
  const auto spec = load_problem(path);
  const auto coefficients = load_coefficients(coefficients_path);
  if (coefficients.size() != spec.problem.basis_size() + 1) {
    throw ParseError(coefficients_path + ": field 'coefficients': expected " +
                     std::to_string(spec.problem.basis_size() + 1) + " values, got " +
                     std::to_string(coefficients.size()));
  }
  const double max_abs = deviation_profile(coefficients, spec.problem).max_abs;
  const double tol = flags.tol.value_or(certification_tolerance(max_abs, spec.options.termination_tol));
  const auto outcome = certify_optimality(coefficients, spec.problem, tol);
  emit(serialize(certify_report(outcome, coefficients, spec.problem, tol)), flags, out);
  return outcome ? kExitOk : kExitRefused;
}

std::vector<fs::path> expand_corpus(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    const fs::path path(input);
    if (!fs::is_directory(path)) {
      files.push_back(path);
      continue;
    }
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        found.push_back(entry.path());
      }
    }
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  return files;
}

int cmd_compare(const std::vector<std::string>& inputs, const Flags& flags, std::ostream& out) {
  std::ostringstream table;
  table << "problem\tstatus\tsolver_sigma\toracle_sigma\tabs_delta\titerations\twall_ms\n";
  for (const auto& path : expand_corpus(inputs)) {
    const auto spec = load_problem(path);
    const auto start = std::chrono::steady_clock::now();
    const auto result = solve_minimax(spec.problem, merged_options(spec.options, flags));
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::optional<double> oracle_sigma;
    try {
      oracle_sigma = lp_minimax(spec.problem).sigma;
    } catch (const Error&) {
    }
    const bool comparable = oracle_sigma && result.status == SolveStatus::OptimalCertified;
    table << path.string() << '\t' << to_string(result.status) << '\t' << format_double(result.sigma)
          << '\t' << (oracle_sigma ? format_double(*oracle_sigma) : "null") << '\t'
          << (comparable ? format_double(std::abs(result.sigma - *oracle_sigma)) : "null") << '\t'
          << result.iterations.size() << '\t' << format_double(elapsed.count()) << '\n';
  }
  emit(table.str(), flags, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete minimax approximation by the exchange method", "vpx"};
  app.require_subcommand(1);

  Flags flags;
  std::string problem;
  std::string coefficients;
  std::vector<std::string> corpus;

  auto* solve = app.add_subcommand("solve", "run the exchange solver and write a report");
  solve->add_option("problem-file", problem)->required();
  add_common_flags(*solve, flags);

  auto* oracle = app.add_subcommand("oracle", "solve the minimax problem as a linear program");
  oracle->add_option("problem-file", problem)->required();
  add_common_flags(*oracle, flags);

  auto* certify = app.add_subcommand("certify", "test coefficients for optimality");
  certify->add_option("problem-file", problem)->required();
  certify->add_option("coefficients-file", coefficients, "JSON array or report with 'coefficients'")
      ->required();
  add_common_flags(*certify, flags);

  auto* compare = app.add_subcommand("compare", "tabulate solver against oracle over problem files");
  compare->add_option("problem-files", corpus, "files or directories of *.json problems")->required();
  add_common_flags(*compare, flags);

  std::vector<std::string> argv_storage{"vpx"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(problem, flags, out);
    }
    if (oracle->parsed()) {
      return cmd_oracle(problem, flags, out);
    }
    if (certify->parsed()) {
      return cmd_certify(problem, coefficients, flags, out);
    }
    return cmd_compare(corpus, flags, out);
  } catch (const ParseError& e) {
    err << "vpx: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "vpx: error: " << e.what() << '\n';
  }
  return kExitInvalidInput;
}

}  // namespace vpx::cli
