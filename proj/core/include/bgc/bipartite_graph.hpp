#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bgc {

/// Bipartite graph over m check nodes (matrix rows) and n variable nodes
/// (matrix columns). Adjacency is stored variable-major with a mirrored
/// check-major index; neighbor lists are kept sorted and duplicate-free.
///
/// Queries are const and safe to call concurrently; add_edge is not, keep a
/// single owner while building.
class BipartiteGraph {
 public:
  BipartiteGraph(int num_checks, int num_vars);

  int num_checks() const { return num_checks_; }
  int num_vars() const { return num_vars_; }
  std::size_t num_edges() const { return num_edges_; }

  bool has_edge(int var, int check) const;

  /// Inserts edge (var, check). Throws std::invalid_argument on duplicate
  /// edges or out-of-range indices.
  void add_edge(int var, int check);

  const std::vector<int>& var_neighbors(int var) const;
  const std::vector<int>& check_neighbors(int check) const;

  int var_degree(int var) const;
  int check_degree(int check) const;

  int min_var_degree() const;

  /// All edges as (check, var) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const BipartiteGraph& other) const = default;

 private:
  void check_var_index(int var) const;
  void check_check_index(int check) const;

  int num_checks_;
  int num_vars_;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<int>> var_adj_;
  std::vector<std::vector<int>> check_adj_;
};

/// Check nodes reachable from `root`, bucketed by minimal graph distance:
/// c1 at distance 1, c2 at distance 3, c3 at distance 5. Sets are sorted and
/// pairwise disjoint.
struct SubgraphFloors {
  int root = 0;
  std::vector<int> c1;
  std::vector<int> c2;
  std::vector<int> c3;
};

struct GirthReport {
  bool has_four_cycle = false;
  /// Shortest cycle length; empty means no cycle was found (acyclic graph
  /// for girth(); "no 4-cycle" for find_four_cycle(), which does not look
  /// further).
  std::optional<int> girth;
  /// Two variable nodes sharing at least two check neighbors, when a
  /// 4-cycle exists.
  std::optional<std::pair<int, int>> four_cycle_witness;
};

/// Truncated breadth-first floor expansion from a variable node.
/// max_floor in {1,2,3}; floors beyond it are returned empty.
SubgraphFloors expand_floors(const BipartiteGraph& graph, int root, int max_floor);

/// Detects a 4-cycle: some pair of variable nodes sharing >= 2 checks.
GirthReport find_four_cycle(const BipartiteGraph& graph);

inline bool has_four_cycle(const BipartiteGraph& graph) {
  return find_four_cycle(graph).has_four_cycle;
}

/// Exact girth via truncated BFS from every variable node.
GirthReport girth(const BipartiteGraph& graph);

std::map<int, int> var_degree_histogram(const BipartiteGraph& graph);
std::map<int, int> check_degree_histogram(const BipartiteGraph& graph);

/// True when every check node lies within floors 1-2 of every variable node,
/// i.e. no edge can be added without creating a 4-cycle.
bool is_four_cycle_saturated(const BipartiteGraph& graph);

}  // namespace bgc
