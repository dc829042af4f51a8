#include "vpx/cli/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace vpx::cli {

namespace {

void write(const Json& value, std::string& out, int indent) {
  const auto newline = [&](int level) {
    out += '\n';
    out.append(static_cast<std::size_t>(level) * 2, ' ');
  };
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) {
          out += ',';
        }
        first = false;
        newline(indent + 1);
        out += Json(key).dump();
        out += ": ";
        write(item, out, indent + 1);
      }
      newline(indent);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = true;
      for (const auto& item : value) {
        scalars = scalars && !item.is_structured();
      }
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) {
          out += scalars ? ", " : ",";
        }
        first = false;
        if (!scalars) {
          newline(indent + 1);
        }
        write(item, out, indent + 1);
      }
      if (!scalars) {
        newline(indent);
      }
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      out += value.dump();
      return;
  }
}

Json labels(const Problem& problem) {
  Json out = Json::array({"1"});
  for (std::size_t i = 0; i < problem.basis_size(); ++i) {
    out.push_back(problem.family().label(i));
  }
  return out;
}

Json certificate_json(const OptimalityCertificate& certificate) {
  return Json{{"e_plus", certificate.e_plus},
              {"e_minus", certificate.e_minus},
              {"u", certificate.u},
              {"v", certificate.v},
              {"common_point", certificate.common_point},
              {"residual", certificate.residual}};
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    return "null";
  }
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

std::string serialize(const Json& value) {
  std::string out;
  write(value, out, 0);
  out += '\n';
  return out;
}

Json solve_report(const SolveResult& result, const Problem& problem) {
  Json report;
  report["status"] = to_string(result.status);
  report["sigma"] = result.sigma;
  report["coefficients"] = result.coefficients.a;
  report["labels"] = labels(problem);
  report["initial_sigma"] = result.sigma_history.empty() ? 0.0 : result.sigma_history.front();
  Json iterations = Json::array();
  for (std::size_t i = 0; i < result.iterations.size(); ++i) {
    const auto& record = result.iterations[i];
    iterations.push_back(Json{{"iteration", i + 1},
                              {"entering", record.entering_index},
                              {"entering_sign", record.entering_sign},
                              {"leaving", record.leaving_index},
                              {"leaving_side", to_string(record.leaving_side)},
                              {"gamma", record.gamma},
                              {"entering_weight", record.entering_weight},
                              {"old_sigma", record.old_sigma},
                              {"sigma", record.new_sigma}});
  }
  report["iterations"] = std::move(iterations);
  if (result.final_basis) {
    report["basis"] = Json{{"positive", result.final_basis->positive()},
                           {"negative", result.final_basis->negative()}};
  } else {
    report["basis"] = nullptr;
  }
  report["certificate"] = result.certificate ? certificate_json(*result.certificate) : Json(nullptr);
  if (!result.message.empty()) {
    report["message"] = result.message;
  }
  return report;
}

Json oracle_report(const OracleResult& result, const Problem& problem) {
  Json report;
  report["status"] = "optimal";
  report["sigma"] = result.sigma;
  report["coefficients"] = result.coefficients.a;
  report["labels"] = labels(problem);
  report["pivots"] = result.pivots;
  return report;
}

Json certify_report(const CertifyOutcome& outcome, const CoefficientVector& coefficients,
                    const Problem& problem, double tol) {
  const auto profile = deviation_profile(coefficients, problem);
  Json report;
  report["status"] = outcome ? "certified" : "refused";
  report["max_deviation"] = profile.max_abs;
  report["tolerance"] = tol;
  report["coefficients"] = coefficients.a;
  if (!outcome) {
    report["reason"] = outcome.reason;
    report["lp_status"] = outcome.lp_status ? Json(to_string(*outcome.lp_status)) : Json(nullptr);
  }
  report["certificate"] = outcome.certificate ? certificate_json(*outcome.certificate) : Json(nullptr);
  return report;
}

}  // namespace vpx::cli
