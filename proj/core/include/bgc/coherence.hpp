#pragma once

#include <utility>

#include "bgc/sensing_matrix.hpp"

namespace bgc {

struct CoherenceReport {
  /// Maximum |<a_i, a_j>| / (|a_i| |a_j|) over column pairs i != j.
  double mu = 0.0;
  /// Largest integer k with k < (1/mu + 1)/2; m when mu == 0 (the trivial
  /// rank cap, the bound itself is vacuous there).
  long long k_bound = 0;
  std::pair<int, int> argmax_pair{0, 0};
};

/// Throws std::invalid_argument naming the column if any column is all zero.
CoherenceReport coherence(const SensingMatrix& matrix);

/// Largest k honoring the mutual-coherence recovery bound for this mu.
long long coherence_k_bound(double mu, int num_rows);

}  // namespace bgc
