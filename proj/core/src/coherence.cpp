#include "bgc/coherence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bgc {

long long coherence_k_bound(double mu, int num_rows) {
  if (mu <= 0.0) return num_rows;
  const double bound = 0.5 * (1.0 / mu + 1.0);
  // Largest integer strictly below `bound`; values within 1e-12 of an
  // integer count as that integer so fp noise cannot inflate the bound.
  long long k = static_cast<long long>(std::floor(bound));
  if (static_cast<double>(k) >= bound - 1e-12) --k;
  return k < 0 ? 0 : k;
}

CoherenceReport coherence(const SensingMatrix& matrix) {
  const int n = matrix.cols();
  if (n < 1) throw std::invalid_argument("coherence needs at least one column");

  Eigen::MatrixXd normalized = matrix.entries;
  for (int col = 0; col < n; ++col) {
    const double norm = normalized.col(col).norm();
    if (norm == 0.0) {
      throw std::invalid_argument("column " + std::to_string(col) +
                                  " is all-zero; coherence undefined");
    }
    normalized.col(col) /= norm;
  }

  Eigen::MatrixXd gram = normalized.transpose() * normalized;

  CoherenceReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double value = std::abs(gram(i, j));
      if (value > report.mu) {
        report.mu = value;
        report.argmax_pair = {i, j};
      }
    }
  }
  report.mu = std::min(report.mu, 1.0);  // clip fp overshoot on parallel columns
  report.k_bound = coherence_k_bound(report.mu, matrix.rows());
  return report;
}

}  // namespace bgc
