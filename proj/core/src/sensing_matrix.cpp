#include "bgc/sensing_matrix.hpp"

#include <stdexcept>

#include "bgc/rng.hpp"

namespace bgc {

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::binary: return "binary";
    case MatrixKind::ternary: return "ternary";
    case MatrixKind::gaussian: return "gaussian";
  }
  throw std::logic_error("unknown matrix kind");
}

namespace {

std::vector<std::vector<int>> supports_from_graph(const BipartiteGraph& graph) {
  std::vector<std::vector<int>> supports(static_cast<std::size_t>(graph.num_vars()));
  for (int var = 0; var < graph.num_vars(); ++var) {
    supports[static_cast<std::size_t>(var)] = graph.var_neighbors(var);
  }
  return supports;
}

}  // namespace

SensingMatrix realize_binary(const BipartiteGraph& graph) {
  SensingMatrix matrix;
  matrix.kind = MatrixKind::binary;
  matrix.entries = Eigen::MatrixXd::Zero(graph.num_checks(), graph.num_vars());
  matrix.column_support = supports_from_graph(graph);
  for (int var = 0; var < graph.num_vars(); ++var) {
    for (int check : graph.var_neighbors(var)) {
      matrix.entries(check, var) = 1.0;
    }
  }
  return matrix;
}

SensingMatrix realize_ternary(const BipartiteGraph& graph, std::uint64_t seed) {
  SensingMatrix matrix;
  matrix.kind = MatrixKind::ternary;
  matrix.source_seed = seed;
  matrix.entries = Eigen::MatrixXd::Zero(graph.num_checks(), graph.num_vars());
  matrix.column_support = supports_from_graph(graph);
  Xoshiro256 rng(seed);
  // Column-major, sorted row order inside each column: the sign stream is a
  // stable function of the seed and the graph.
  for (int var = 0; var < graph.num_vars(); ++var) {
    for (int check : graph.var_neighbors(var)) {
      matrix.entries(check, var) = rng.coin() ? 1.0 : -1.0;
    }
  }
  return matrix;
}

SensingMatrix sample_gaussian(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gaussian matrix needs rows, cols >= 1");
  SensingMatrix matrix;
  matrix.kind = MatrixKind::gaussian;
  matrix.source_seed = seed;
  matrix.entries.resize(rows, cols);
  Xoshiro256 rng(seed);
  for (int col = 0; col < cols; ++col) {
    for (int row = 0; row < rows; ++row) {
      matrix.entries(row, col) = rng.normal();
    }
  }
  return matrix;
}

}  // namespace bgc
