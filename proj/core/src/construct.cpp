#include "bgc/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bgc/rng.hpp"

namespace bgc {

namespace {

void validate_sizes(const ConstructionConfig& config) {
  if (config.num_checks < 1 || config.num_vars < 1) {
    throw std::invalid_argument("construction needs num_checks >= 1 and num_vars >= 1");
  }
}

// Keeps only minimum-degree checks among candidates.
void restrict_to_min_degree(const BipartiteGraph& graph, std::vector<int>& candidates) {
  int min_degree = std::numeric_limits<int>::max();
  for (int check : candidates) min_degree = std::min(min_degree, graph.check_degree(check));
  std::erase_if(candidates, [&](int check) { return graph.check_degree(check) != min_degree; });
}

int pick_check(const BipartiteGraph& graph, std::vector<int>& candidates, bool balance,
               Xoshiro256& rng) {
  if (balance) restrict_to_min_degree(graph, candidates);
  return candidates[rng.uniform_below(candidates.size())];
}

}  // namespace

ConstructionReport make_construction_report(BipartiteGraph graph, int iterations_used) {
  ConstructionReport report{std::move(graph), iterations_used, {}, {}, 0, 0.0, 0};
  report.var_degree_histogram = var_degree_histogram(report.graph);
  report.check_degree_histogram = check_degree_histogram(report.graph);
  report.num_edges = report.graph.num_edges();
  report.average_var_degree =
      static_cast<double>(report.num_edges) / static_cast<double>(report.graph.num_vars());
  report.min_var_degree = report.graph.min_var_degree();
  return report;
}

ConstructionReport bgc_construct(const ConstructionConfig& config) {
  validate_sizes(config);
  const int m = config.num_checks;
  const int n = config.num_vars;

  BipartiteGraph graph(m, n);
  Xoshiro256 rng(config.seed);

  std::vector<int> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 0);

  std::vector<char> in_subgraph(static_cast<std::size_t>(m));
  std::vector<int> candidates;
  std::vector<char> retired(static_cast<std::size_t>(n), 0);

  int iterations = 0;
  // A variable gains one edge per iteration until its two-floor subgraph
  // covers every check, so m outer iterations always suffice.
  for (int iteration = 0; iteration < m && !active.empty(); ++iteration) {
    ++iterations;
    std::vector<int> order = active;  // snapshot; retirements apply next iteration
    shuffle(order, rng);
    for (int var : order) {
      SubgraphFloors floors = expand_floors(graph, var, 3);
      if (!floors.c3.empty()) {
        // Close a 6-cycle: floor-3 checks sit at distance exactly 5.
        candidates = floors.c3;
        graph.add_edge(var, pick_check(graph, candidates, config.balance_checks, rng));
        continue;
      }
      // With no floor-3 checks the subgraph cannot reach deeper, so anything
      // outside floors 1-2 is unreachable and joins without creating a cycle.
      std::fill(in_subgraph.begin(), in_subgraph.end(), 0);
      for (int check : floors.c1) in_subgraph[static_cast<std::size_t>(check)] = 1;
      for (int check : floors.c2) in_subgraph[static_cast<std::size_t>(check)] = 1;
      candidates.clear();
      for (int check = 0; check < m; ++check) {
        if (!in_subgraph[static_cast<std::size_t>(check)]) candidates.push_back(check);
      }
      if (!candidates.empty()) {
        graph.add_edge(var, pick_check(graph, candidates, config.balance_checks, rng));
      } else {
        retired[static_cast<std::size_t>(var)] = 1;
      }
    }
    std::erase_if(active, [&](int var) { return retired[static_cast<std::size_t>(var)] != 0; });
  }
  return make_construction_report(std::move(graph), iterations);
}

namespace {

// One full PEG pass at the given uniform degree. Returns the graph without
// any girth screening.
BipartiteGraph peg_attempt(int m, int n, int degree, Xoshiro256& rng) {
  BipartiteGraph graph(m, n);
  std::vector<char> check_seen(static_cast<std::size_t>(m));
  std::vector<char> var_seen(static_cast<std::size_t>(n));
  std::vector<int> frontier_checks, next_checks, frontier_vars, candidates;

  for (int var = 0; var < n; ++var) {
    for (int edge = 0; edge < degree; ++edge) {
      candidates.clear();
      if (edge == 0) {
        // First edge: any check; lowest degree spreads row weight.
        for (int check = 0; check < m; ++check) candidates.push_back(check);
      } else {
        // Expand the subgraph under the current graph as deep as possible;
        // stop when it saturates or the next level would cover every check,
        // and take the complement just before that.
        std::fill(check_seen.begin(), check_seen.end(), 0);
        std::fill(var_seen.begin(), var_seen.end(), 0);
        var_seen[static_cast<std::size_t>(var)] = 1;
        std::size_t covered = 0;
        frontier_checks.clear();
        for (int check : graph.var_neighbors(var)) {
          check_seen[static_cast<std::size_t>(check)] = 1;
          frontier_checks.push_back(check);
          ++covered;
        }
        for (;;) {
          frontier_vars.clear();
          for (int check : frontier_checks) {
            for (int v : graph.check_neighbors(check)) {
              if (!var_seen[static_cast<std::size_t>(v)]) {
                var_seen[static_cast<std::size_t>(v)] = 1;
                frontier_vars.push_back(v);
              }
            }
          }
          next_checks.clear();
          for (int v : frontier_vars) {
            for (int check : graph.var_neighbors(v)) {
              if (!check_seen[static_cast<std::size_t>(check)]) {
                check_seen[static_cast<std::size_t>(check)] = 1;
                next_checks.push_back(check);
              }
            }
          }
          if (next_checks.empty()) {
            // Saturated short of full coverage: unreachable checks join
            // without creating a cycle.
            for (int check = 0; check < m; ++check) {
              if (!check_seen[static_cast<std::size_t>(check)]) candidates.push_back(check);
            }
            break;
          }
          covered += next_checks.size();
          if (covered == static_cast<std::size_t>(m)) {
            // This level completed the coverage, so its checks are the most
            // distant ones.
            candidates = next_checks;
            break;
          }
          frontier_checks = next_checks;
        }
        if (candidates.empty()) {
          // Unreachable only if floor 1 covered all m checks, which the
          // degree <= m precondition rules out.
          throw std::logic_error("peg: no candidate check");
        }
      }
      restrict_to_min_degree(graph, candidates);
      graph.add_edge(var, candidates[rng.uniform_below(candidates.size())]);
    }
  }
  return graph;
}

}  // namespace

PegResult peg_construct(const ConstructionConfig& config, int uniform_degree, int max_retries) {
  validate_sizes(config);
  if (uniform_degree < 1 || uniform_degree > config.num_checks) {
    throw std::invalid_argument("uniform_degree must be in [1, num_checks]");
  }
  if (max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");

  PegResult result;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Xoshiro256 rng(derive_seed(config.seed, static_cast<std::uint64_t>(attempt)));
    BipartiteGraph graph =
        peg_attempt(config.num_checks, config.num_vars, uniform_degree, rng);
    result.attempts_used = attempt + 1;
    result.girth_ok = !has_four_cycle(graph);
    if (result.girth_ok || attempt == max_retries) {
      result.report = make_construction_report(std::move(graph), result.attempts_used);
      break;
    }
  }
  return result;
}

namespace {

// d + d(dn/m - 1)(d - 1); strictly increasing in d on [1, m] for m, n >= 1.
double regular_degree_residual(double d, double m, double n) {
  return d + d * (d * n / m - 1.0) * (d - 1.0);
}

}  // namespace

DegreeEstimate estimate_regular_degree(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("estimate needs m >= 1 and n >= 1");

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);

  DegreeEstimate estimate;
  if (m == 1) {
    estimate.d_real = 1.0;  // f(1) = 1 = m exactly
  } else {
    double lo = 1.0, hi = md;  // f(1) = 1 < m <= f(m)
    for (int step = 0; step < 200 && hi - lo > 1e-12; ++step) {
      const double mid = 0.5 * (lo + hi);
      if (regular_degree_residual(mid, md, nd) < md) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    estimate.d_real = 0.5 * (lo + hi);
  }

  // Monotonicity puts the integer argmin next to the real root; ties break
  // toward the smaller degree.
  const int floor_d = std::max(1, static_cast<int>(std::floor(estimate.d_real)));
  const int ceil_d = std::max(1, static_cast<int>(std::ceil(estimate.d_real)));
  const double floor_gap = std::abs(regular_degree_residual(floor_d, md, nd) - md);
  const double ceil_gap = std::abs(regular_degree_residual(ceil_d, md, nd) - md);
  estimate.d_int = floor_gap <= ceil_gap ? floor_d : ceil_d;
  return estimate;
}

}  // namespace bgc
