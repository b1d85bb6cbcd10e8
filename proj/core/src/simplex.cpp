#include "bgc/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace bgc {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;

}  // namespace

LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  const LpOptions& options) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;

  const int num_cols = static_cast<int>(A.cols());
  LpResult result;
  result.x = VectorXd::Zero(num_cols);

  // Working system with nonnegative right-hand side. Rows may be deleted
  // after phase 1 when they turn out redundant.
  MatrixXd Aw = A;
  VectorXd bw = b;
  int m = static_cast<int>(Aw.rows());
  for (int i = 0; i < m; ++i) {
    if (bw(i) < 0) {
      bw(i) = -bw(i);
      Aw.row(i) = -Aw.row(i);
    }
  }

  const int max_iterations =
      options.max_iterations > 0 ? options.max_iterations : 50 * (m + num_cols) + 1000;

  // Basis bookkeeping. Indices >= num_cols denote the phase-1 artificial
  // for that row; artificials never re-enter once gone.
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::vector<char> in_basis(static_cast<std::size_t>(num_cols), 0);
  for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = num_cols + i;

  MatrixXd Binv = MatrixXd::Identity(m, m);
  VectorXd xB = bw;
  int pivots_since_refactor = 0;

  auto basis_column = [&](int index) -> VectorXd {
    if (index < num_cols) return Aw.col(index);
    VectorXd e = VectorXd::Zero(m);
    e(index - num_cols) = 1.0;
    return e;
  };

  auto refactor = [&]() -> bool {
    MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = basis_column(basis[static_cast<std::size_t>(i)]);
    Eigen::FullPivLU<MatrixXd> lu(B);
    if (!lu.isInvertible()) return false;
    Binv = lu.inverse();
    xB = Binv * bw;
    for (int i = 0; i < m; ++i) {
      if (xB(i) < 0) {
        if (xB(i) < -1e-7) return false;
        xB(i) = 0.0;
      }
    }
    pivots_since_refactor = 0;
    return true;
  };

  auto pivot = [&](int entering, int leaving_row, const VectorXd& direction) {
    const double step = xB(leaving_row) / direction(leaving_row);
    xB -= step * direction;
    xB(leaving_row) = step;
    for (int i = 0; i < m; ++i) {
      if (xB(i) < 0 && xB(i) > -1e-11) xB(i) = 0.0;
    }
    const Eigen::RowVectorXd pivot_row = Binv.row(leaving_row) / direction(leaving_row);
    Binv.noalias() -= direction * pivot_row;
    Binv.row(leaving_row) = pivot_row;

    const int leaving = basis[static_cast<std::size_t>(leaving_row)];
    if (leaving < num_cols) in_basis[static_cast<std::size_t>(leaving)] = 0;
    basis[static_cast<std::size_t>(leaving_row)] = entering;
    in_basis[static_cast<std::size_t>(entering)] = 1;
    ++pivots_since_refactor;
    return step;
  };

  // Lexicographic ratio test: among rows with a positive direction entry,
  // pick the one minimizing (xB_i, Binv_i*) / d_i lexicographically. Keeps
  // every augmented row lexico-positive, which rules out cycling under any
  // entering rule (it is the exact epsilon-perturbation in disguise).
  auto lexicographic_leaving_row = [&](const VectorXd& direction) -> int {
    int leaving = -1;
    for (int i = 0; i < m; ++i) {
      if (direction(i) <= kPivotTol) continue;
      if (leaving < 0) {
        leaving = i;
        continue;
      }
      const double ratio_i = xB(i) / direction(i);
      const double ratio_l = xB(leaving) / direction(leaving);
      if (ratio_i < ratio_l - kRatioTieTol) {
        leaving = i;
      } else if (ratio_i < ratio_l + kRatioTieTol) {
        for (int col = 0; col < m; ++col) {
          const double lhs = Binv(i, col) / direction(i);
          const double rhs = Binv(leaving, col) / direction(leaving);
          if (lhs < rhs - kRatioTieTol) {
            leaving = i;
            break;
          }
          if (lhs > rhs + kRatioTieTol) break;
        }
      }
    }
    return leaving;
  };

  // Runs simplex iterations for the given per-column costs (artificials cost
  // `artificial_cost`). Returns optimal/iteration_limit/unbounded/
  // numerical_failure.
  auto run_phase = [&](const VectorXd& cost, double artificial_cost) -> LpStatus {
    VectorXd cB(m), y(m), yA(num_cols), direction(m);
    for (;;) {
      if (result.iterations >= max_iterations) return LpStatus::iteration_limit;
      ++result.iterations;
      if (pivots_since_refactor >= options.refactor_interval) {
        if (!refactor()) return LpStatus::numerical_failure;
      }

      for (int i = 0; i < m; ++i) {
        const int index = basis[static_cast<std::size_t>(i)];
        cB(i) = index < num_cols ? cost(index) : artificial_cost;
      }
      y.noalias() = Binv.transpose() * cB;
      yA.noalias() = Aw.transpose() * y;

      int entering = -1;
      double best = -options.opt_tol;
      for (int j = 0; j < num_cols; ++j) {
        if (in_basis[static_cast<std::size_t>(j)]) continue;
        const double reduced = cost(j) - yA(j);
        if (reduced < best) {
          best = reduced;
          entering = j;
        }
      }
      if (entering < 0) return LpStatus::optimal;

      direction.noalias() = Binv * Aw.col(entering);
      const int leaving_row = lexicographic_leaving_row(direction);
      if (leaving_row < 0) return LpStatus::unbounded;
      pivot(entering, leaving_row, direction);
    }
  };

  // Phase 1: minimize the artificial mass.
  {
    const VectorXd zero_cost = VectorXd::Zero(num_cols);
    const LpStatus status = run_phase(zero_cost, 1.0);
    if (status != LpStatus::optimal) {
      result.status = status;
      return result;
    }
    double artificial_mass = 0.0;
    for (int i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] >= num_cols) artificial_mass += xB(i);
    }
    if (artificial_mass > options.feas_tol) {
      result.status = LpStatus::infeasible;
      return result;
    }
  }

  // Drive remaining zero-level artificials out of the basis; rows that admit
  // no pivot are redundant and get dropped.
  {
    std::vector<int> redundant_rows;
    for (int i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] < num_cols) continue;
      const Eigen::RowVectorXd row = Binv.row(i) * Aw;
      int entering = -1;
      for (int j = 0; j < num_cols; ++j) {
        if (!in_basis[static_cast<std::size_t>(j)] && std::abs(row(j)) > 1e-7) {
          entering = j;
          break;
        }
      }
      if (entering >= 0) {
        VectorXd direction = Binv * Aw.col(entering);
        pivot(entering, i, direction);
      } else {
        redundant_rows.push_back(i);
      }
    }
    if (!redundant_rows.empty()) {
      const int new_m = m - static_cast<int>(redundant_rows.size());
      MatrixXd Anew(new_m, num_cols);
      VectorXd bnew(new_m);
      std::vector<int> new_basis;
      new_basis.reserve(static_cast<std::size_t>(new_m));
      std::vector<char> drop(static_cast<std::size_t>(m), 0);
      for (int row : redundant_rows) drop[static_cast<std::size_t>(row)] = 1;
      int out = 0;
      for (int i = 0; i < m; ++i) {
        if (drop[static_cast<std::size_t>(i)]) continue;
        Anew.row(out) = Aw.row(i);
        bnew(out) = bw(i);
        ++out;
      }
      for (int i = 0; i < m; ++i) {
        if (!drop[static_cast<std::size_t>(i)]) {
          new_basis.push_back(basis[static_cast<std::size_t>(i)]);
        }
      }
      Aw = std::move(Anew);
      bw = std::move(bnew);
      basis = std::move(new_basis);
      m = new_m;
      Binv.resize(m, m);
      xB.resize(m);
      if (m == 0) {
        // Every constraint was redundant (b = 0 up to tolerance): x = 0,
        // optimal whenever the objective has no profitable direction.
        result.status = c.minCoeff() < -options.opt_tol ? LpStatus::unbounded : LpStatus::optimal;
        result.objective = 0.0;
        return result;
      }
      if (!refactor()) {
        result.status = LpStatus::numerical_failure;
        return result;
      }
    }
  }

  // Phase 2 on the real objective. Artificials are gone; a huge artificial
  // cost would keep any numerical stray out regardless.
  {
    const LpStatus status = run_phase(c, 1e30);
    if (status != LpStatus::optimal) {
      result.status = status;
      // Best-effort iterate for diagnostics.
      for (int i = 0; i < m; ++i) {
        const int index = basis[static_cast<std::size_t>(i)];
        if (index < num_cols) result.x(index) = std::max(0.0, xB(i));
      }
      result.objective = c.dot(result.x);
      return result;
    }
  }

  // Final polish: recompute the basic solution from a fresh factorization.
  if (!refactor()) {
    result.status = LpStatus::numerical_failure;
    return result;
  }
  for (int i = 0; i < m; ++i) {
    const int index = basis[static_cast<std::size_t>(i)];
    if (index < num_cols) result.x(index) = std::max(0.0, xB(i));
  }
  result.objective = c.dot(result.x);

  const double violation = (A * result.x - b).cwiseAbs().maxCoeff();
  result.status = violation <= options.feas_tol * 10 + 1e-12 ? LpStatus::optimal
                                                             : LpStatus::numerical_failure;
  return result;
}

}  // namespace bgc
