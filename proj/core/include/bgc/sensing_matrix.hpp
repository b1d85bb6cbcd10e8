#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bgc/bipartite_graph.hpp"

namespace bgc {

enum class MatrixKind { binary, ternary, gaussian };

std::string to_string(MatrixKind kind);

/// Dense sensing matrix plus, for graph-realized kinds, the per-column
/// support (row indices of nonzeros) for sparse analytics.
struct SensingMatrix {
  MatrixKind kind = MatrixKind::binary;
  std::optional<std::uint64_t> source_seed;
  Eigen::MatrixXd entries;
  std::vector<std::vector<int>> column_support;  // empty for gaussian

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// entry(r, c) = 1 iff the graph has edge (variable c, check r).
SensingMatrix realize_binary(const BipartiteGraph& graph);

/// Same support as realize_binary with each nonzero independently +-1.
SensingMatrix realize_ternary(const BipartiteGraph& graph, std::uint64_t seed);

/// i.i.d. standard normal entries.
SensingMatrix sample_gaussian(int rows, int cols, std::uint64_t seed);

}  // namespace bgc
