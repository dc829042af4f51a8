#include "vpx/oracle.hpp"

#include <string>

#include "vpx/errors.hpp"
#include "vpx/numerics.hpp"

namespace vpx {

// The primal LP has n + 2 free variables and 2N inequality rows. It is solved through its dual,
//   maximize   sum_k f_k (p_k - q_k)
//   subject to sum_k (p_k - q_k) (1, g(x_k)) = 0,  sum_k (p_k + q_k) = 1,  p, q >= 0,
// whose tableau has only n + 2 rows. The simplex multipliers of the dual's rows are the primal
// solution: the first n + 1 give A and the last gives sigma.
OracleResult lp_minimax(const Problem& problem) {
  const std::size_t count = problem.size();
  if (count > kOracleMaxPoints) {
    throw ContractViolation("lp_minimax supports at most " + std::to_string(kOracleMaxPoints) +
                            " points, got " + std::to_string(count));
  }
  const std::size_t width = problem.basis_size() + 1;

  LpProblem lp;
  lp.sense = Sense::Maximize;
  lp.objective.resize(2 * count);
  lp.constraints = DenseMatrix(width + 1, 2 * count);
  lp.relations.assign(width + 1, Relation::Equal);
  lp.rhs.assign(width + 1, 0.0);
  lp.rhs[width] = 1.0;
  for (std::size_t k = 0; k < count; ++k) {
    const double f = problem.domain().value(k);
    lp.objective[2 * k] = f;
    lp.objective[2 * k + 1] = -f;
    const auto lifted = problem.lifted(k);
    for (std::size_t i = 0; i < width; ++i) {
      lp.constraints(i, 2 * k) = lifted[i];
      lp.constraints(i, 2 * k + 1) = -lifted[i];
    }
    lp.constraints(width, 2 * k) = 1.0;
    lp.constraints(width, 2 * k + 1) = 1.0;
  }

  const auto solution = simplex_solve(lp);
  if (solution.status != LpStatus::Optimal) {
    throw Error(std::string("minimax LP did not reach an optimum: ") + to_string(solution.status));
  }
  OracleResult out;
  out.coefficients.a.assign(solution.duals.begin(),
                            solution.duals.begin() + static_cast<std::ptrdiff_t>(width));
  out.sigma = solution.objective_value;
  out.pivots = solution.pivots;
  return out;
}

}  // namespace vpx
