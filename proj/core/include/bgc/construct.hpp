#pragma once

#include <cstdint>
#include <map>

#include "bgc/bipartite_graph.hpp"

namespace bgc {

struct ConstructionConfig {
  int num_checks = 1;  // m, matrix rows
  int num_vars = 1;    // n, matrix columns
  std::uint64_t seed = 0;
  /// Restrict random check picks to minimum-degree candidates. Off by
  /// default; it does not noticeably raise the edge count.
  bool balance_checks = false;
};

struct ConstructionReport {
  BipartiteGraph graph{1, 1};
  int iterations_used = 0;
  std::map<int, int> var_degree_histogram;
  std::map<int, int> check_degree_histogram;
  std::size_t num_edges = 0;
  double average_var_degree = 0.0;  // num_edges / num_vars
  int min_var_degree = 0;
};

/// Greedy girth-6 construction: grows the graph one edge per variable per
/// iteration, preferring a floor-3 check (closing a 6-cycle) and otherwise a
/// check outside the variable's subgraph (closing nothing); a variable whose
/// two-floor subgraph already covers every check is retired. The result has
/// no 4-cycles, girth exactly 6 whenever a cycle exists, and admits no
/// further edge without creating a 4-cycle.
ConstructionReport bgc_construct(const ConstructionConfig& config);

struct PegResult {
  ConstructionReport report;
  /// True when the accepted attempt contains no 4-cycle.
  bool girth_ok = false;
  int attempts_used = 0;
};

/// Progressive edge-growth with a uniform column degree: each edge expands
/// the variable's subgraph as deep as possible and connects to a
/// minimum-degree check among the most distant (or unreachable) ones.
/// PEG cannot rule out 4-cycles, so failed attempts are retried with a fresh
/// random stream, up to max_retries extra attempts; the last attempt is
/// returned either way with girth_ok saying whether it is clean.
PegResult peg_construct(const ConstructionConfig& config, int uniform_degree, int max_retries);

struct DegreeEstimate {
  double d_real = 1.0;  // real root > 1 of d + d(dn/m - 1)(d - 1) = m
  int d_int = 1;        // integer minimizing |d + d(dn/m - 1)(d - 1) - m|
};

/// Estimated uniform column degree of an ideal regular girth-6 graph whose
/// two-floor subgraphs cover all m checks.
DegreeEstimate estimate_regular_degree(int m, int n);

ConstructionReport make_construction_report(BipartiteGraph graph, int iterations_used);

}  // namespace bgc
