#pragma once

#include <optional>

#include <Eigen/Dense>

#include "bgc/sensing_matrix.hpp"

namespace bgc {

enum class RecoveryStatus { optimal, infeasible, iteration_limit };

struct RecoveryOutcome {
  Eigen::VectorXd estimate;
  double objective = 0.0;  // l1 norm of the estimate
  double residual = 0.0;   // ||A x - y||_2
  RecoveryStatus status = RecoveryStatus::iteration_limit;
  /// ||estimate - truth||_2 / ||truth||_2, filled when the truth is known.
  std::optional<double> relative_error;
};

struct BasisPursuitOptions {
  double feas_tol = 1e-8;
  double opt_tol = 1e-8;
  int max_iterations = 0;  // 0 = solver default
};

/// min ||x||_1 s.t. Ax = y, via the nonnegative split x = u - v solved as a
/// linear program (2n variables, m equality constraints).
RecoveryOutcome basis_pursuit(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                              const BasisPursuitOptions& options = {});
RecoveryOutcome basis_pursuit(const SensingMatrix& matrix, const Eigen::VectorXd& y,
                              const BasisPursuitOptions& options = {});

/// Exhaustive minimum-l1 search over all supports of size <= m; the
/// independent check for basis_pursuit on tiny instances. Requires n <= 14.
RecoveryOutcome brute_force_l1(const Eigen::MatrixXd& A, const Eigen::VectorXd& y);

/// ||estimate - truth|| / ||truth||; 0 when both are zero, infinity when only
/// the truth is.
double relative_error(const Eigen::VectorXd& truth, const Eigen::VectorXd& estimate);

/// Throws std::invalid_argument naming the first all-zero column, if any.
void require_nonzero_columns(const Eigen::MatrixXd& A);

}  // namespace bgc
