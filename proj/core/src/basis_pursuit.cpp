#include "bgc/basis_pursuit.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgc/simplex.hpp"

namespace bgc {

void require_nonzero_columns(const Eigen::MatrixXd& A) {
  for (Eigen::Index col = 0; col < A.cols(); ++col) {
    if (A.col(col).norm() == 0.0) {
      throw std::invalid_argument("column " + std::to_string(col) +
                                  " is all-zero; recovery problem rejected");
    }
  }
}

double relative_error(const Eigen::VectorXd& truth, const Eigen::VectorXd& estimate) {
  const double truth_norm = truth.norm();
  if (truth_norm == 0.0) {
    return estimate.norm() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return (estimate - truth).norm() / truth_norm;
}

RecoveryOutcome basis_pursuit(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                              const BasisPursuitOptions& options) {
  if (y.size() != A.rows()) throw std::invalid_argument("y must have one entry per matrix row");
  require_nonzero_columns(A);

  const Eigen::Index n = A.cols();
  Eigen::MatrixXd split(A.rows(), 2 * n);
  split << A, -A;
  const Eigen::VectorXd cost = Eigen::VectorXd::Ones(2 * n);

  LpOptions lp_options;
  lp_options.feas_tol = options.feas_tol;
  lp_options.opt_tol = options.opt_tol;
  lp_options.max_iterations = options.max_iterations;
  const LpResult lp = solve_lp(split, y, cost, lp_options);

  RecoveryOutcome outcome;
  outcome.estimate = lp.x.head(n) - lp.x.tail(n);
  outcome.objective = outcome.estimate.lpNorm<1>();
  outcome.residual = (A * outcome.estimate - y).norm();
  switch (lp.status) {
    case LpStatus::optimal:
      outcome.status = RecoveryStatus::optimal;
      break;
    case LpStatus::infeasible:
      outcome.status = RecoveryStatus::infeasible;
      break;
    default:
      outcome.status = RecoveryStatus::iteration_limit;
      break;
  }
  return outcome;
}

RecoveryOutcome basis_pursuit(const SensingMatrix& matrix, const Eigen::VectorXd& y,
                              const BasisPursuitOptions& options) {
  return basis_pursuit(matrix.entries, y, options);
}

RecoveryOutcome brute_force_l1(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(A.cols());
  const int m = static_cast<int>(A.rows());
  if (n > 14) {
    throw std::invalid_argument("brute_force_l1 is limited to n <= 14 columns, got " +
                                std::to_string(n));
  }
  const double feas_tol = 1e-8 * std::max(1.0, y.norm());

  RecoveryOutcome best;
  best.estimate = Eigen::VectorXd::Zero(n);
  best.status = RecoveryStatus::infeasible;
  double best_objective = std::numeric_limits<double>::infinity();

  // Some optimal vertex uses at most m columns, so supports up to size m
  // cover the optimum exactly.
  std::vector<int> support;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > m) continue;

    support.clear();
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) support.push_back(j);
    }

    Eigen::VectorXd coefficients;
    double residual;
    if (support.empty()) {
      residual = y.norm();
    } else {
      Eigen::MatrixXd sub(m, support.size());
      for (std::size_t i = 0; i < support.size(); ++i) sub.col(i) = A.col(support[i]);
      coefficients = sub.colPivHouseholderQr().solve(y);
      residual = (sub * coefficients - y).norm();
    }
    if (residual > feas_tol) continue;

    double objective = 0.0;
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) objective += std::abs(coefficients(i));
    if (objective < best_objective - 1e-12) {
      best_objective = objective;
      best.estimate.setZero();
      for (std::size_t i = 0; i < support.size(); ++i) {
        best.estimate(support[i]) = coefficients(i);
      }
      best.status = RecoveryStatus::optimal;
    }
  }

  best.objective = best.status == RecoveryStatus::optimal ? best_objective : 0.0;
  best.residual = (A * best.estimate - y).norm();
  return best;
}

}  // namespace bgc
