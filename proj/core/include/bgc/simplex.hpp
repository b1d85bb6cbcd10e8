#pragma once

#include <Eigen/Dense>

namespace bgc {

enum class LpStatus { optimal, infeasible, iteration_limit, unbounded, numerical_failure };

struct LpOptions {
  double feas_tol = 1e-8;      // allowed ||Ax - b||_inf at the reported solution
  double opt_tol = 1e-9;       // reduced-cost threshold for optimality
  int max_iterations = 0;      // 0 = 50 * (rows + cols) + 1000
  int refactor_interval = 96;  // rebuild the basis inverse every this many pivots
};

struct LpResult {
  LpStatus status = LpStatus::numerical_failure;
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

/// Two-phase dense revised simplex for min c'x s.t. Ax = b, x >= 0.
/// Dantzig pricing with an automatic switch to Bland's rule on stalls;
/// redundant rows surviving phase 1 are dropped. Fully deterministic.
LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LpOptions& options = {});

}  // namespace bgc
