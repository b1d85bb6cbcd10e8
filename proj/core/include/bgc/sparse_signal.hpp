#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace bgc {

enum class Signing { signed_pm1, unsigned_one };

/// k-sparse vector with nonzeros drawn from {+-1} (signed) or {1} (unsigned).
struct SparseSignal {
  int dimension = 0;
  std::vector<int> support;     // sorted, distinct
  std::vector<double> values;   // parallel to support, all nonzero
  Signing signing = Signing::signed_pm1;

  int sparsity() const { return static_cast<int>(support.size()); }
  Eigen::VectorXd to_dense() const;
};

/// Uniform support without replacement; values per signing; deterministic
/// per seed. k == 0 yields the zero signal.
SparseSignal generate_signal(int n, int k, Signing signing, std::uint64_t seed);

/// Text format: whitespace-separated `index:value` pairs, 0-based indices.
SparseSignal read_signal(std::istream& in, int dimension);
SparseSignal read_signal(const std::filesystem::path& path, int dimension);
void write_signal_entries(const Eigen::VectorXd& vector, std::ostream& out);

}  // namespace bgc
