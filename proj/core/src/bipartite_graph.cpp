#include "bgc/bipartite_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bgc {

BipartiteGraph::BipartiteGraph(int num_checks, int num_vars)
    : num_checks_(num_checks), num_vars_(num_vars) {
  if (num_checks < 1 || num_vars < 1) {
    throw std::invalid_argument("graph needs at least one check and one variable node");
  }
  var_adj_.resize(static_cast<std::size_t>(num_vars));
  check_adj_.resize(static_cast<std::size_t>(num_checks));
}

void BipartiteGraph::check_var_index(int var) const {
  if (var < 0 || var >= num_vars_) {
    throw std::invalid_argument("variable index " + std::to_string(var) + " out of range [0, " +
                                std::to_string(num_vars_) + ")");
  }
}

void BipartiteGraph::check_check_index(int check) const {
  if (check < 0 || check >= num_checks_) {
    throw std::invalid_argument("check index " + std::to_string(check) + " out of range [0, " +
                                std::to_string(num_checks_) + ")");
  }
}

bool BipartiteGraph::has_edge(int var, int check) const {
  check_var_index(var);
  check_check_index(check);
  const auto& adj = var_adj_[static_cast<std::size_t>(var)];
  return std::binary_search(adj.begin(), adj.end(), check);
}

void BipartiteGraph::add_edge(int var, int check) {
  check_var_index(var);
  check_check_index(check);
  auto& vadj = var_adj_[static_cast<std::size_t>(var)];
  auto pos = std::lower_bound(vadj.begin(), vadj.end(), check);
  if (pos != vadj.end() && *pos == check) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(var) + ", " +
                                std::to_string(check) + ")");
  }
  vadj.insert(pos, check);
  auto& cadj = check_adj_[static_cast<std::size_t>(check)];
  cadj.insert(std::lower_bound(cadj.begin(), cadj.end(), var), var);
  ++num_edges_;
}

const std::vector<int>& BipartiteGraph::var_neighbors(int var) const {
  check_var_index(var);
  return var_adj_[static_cast<std::size_t>(var)];
}

const std::vector<int>& BipartiteGraph::check_neighbors(int check) const {
  check_check_index(check);
  return check_adj_[static_cast<std::size_t>(check)];
}

int BipartiteGraph::var_degree(int var) const {
  return static_cast<int>(var_neighbors(var).size());
}

int BipartiteGraph::check_degree(int check) const {
  return static_cast<int>(check_neighbors(check).size());
}

int BipartiteGraph::min_var_degree() const {
  int min_degree = std::numeric_limits<int>::max();
  for (const auto& adj : var_adj_) min_degree = std::min(min_degree, static_cast<int>(adj.size()));
  return min_degree;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(num_edges_);
  for (int check = 0; check < num_checks_; ++check) {
    for (int var : check_adj_[static_cast<std::size_t>(check)]) {
      result.emplace_back(check, var);
    }
  }
  return result;
}

SubgraphFloors expand_floors(const BipartiteGraph& graph, int root, int max_floor) {
  if (root < 0 || root >= graph.num_vars()) {
    throw std::invalid_argument("root variable " + std::to_string(root) + " out of range [0, " +
                                std::to_string(graph.num_vars()) + ")");
  }
  if (max_floor < 1 || max_floor > 3) {
    throw std::invalid_argument("max_floor must be 1, 2, or 3");
  }

  SubgraphFloors floors;
  floors.root = root;

  std::vector<char> check_seen(static_cast<std::size_t>(graph.num_checks()), 0);
  std::vector<char> var_seen(static_cast<std::size_t>(graph.num_vars()), 0);
  var_seen[static_cast<std::size_t>(root)] = 1;

  floors.c1 = graph.var_neighbors(root);
  for (int check : floors.c1) check_seen[static_cast<std::size_t>(check)] = 1;

  // Alternating BFS levels; global marks make each floor the minimal one.
  std::vector<int> frontier_checks = floors.c1;
  std::vector<int> frontier_vars;
  for (int floor = 2; floor <= max_floor; ++floor) {
    frontier_vars.clear();
    for (int check : frontier_checks) {
      for (int var : graph.check_neighbors(check)) {
        if (!var_seen[static_cast<std::size_t>(var)]) {
          var_seen[static_cast<std::size_t>(var)] = 1;
          frontier_vars.push_back(var);
        }
      }
    }
    std::vector<int>& out = floor == 2 ? floors.c2 : floors.c3;
    for (int var : frontier_vars) {
      for (int check : graph.var_neighbors(var)) {
        if (!check_seen[static_cast<std::size_t>(check)]) {
          check_seen[static_cast<std::size_t>(check)] = 1;
          out.push_back(check);
        }
      }
    }
    std::sort(out.begin(), out.end());
    frontier_checks = out;
    if (frontier_checks.empty()) break;
  }
  return floors;
}

GirthReport find_four_cycle(const BipartiteGraph& graph) {
  GirthReport report;
  // Two variables share two checks iff some variable pair occurs under two
  // distinct check nodes.
  std::unordered_map<std::uint64_t, int> first_check;
  const std::uint64_t n = static_cast<std::uint64_t>(graph.num_vars());
  for (int check = 0; check < graph.num_checks(); ++check) {
    const auto& vars = graph.check_neighbors(check);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        const std::uint64_t key = static_cast<std::uint64_t>(vars[i]) * n +
                                  static_cast<std::uint64_t>(vars[j]);
        auto [it, inserted] = first_check.try_emplace(key, check);
        if (!inserted) {
          report.has_four_cycle = true;
          report.girth = 4;
          report.four_cycle_witness = std::make_pair(vars[i], vars[j]);
          return report;
        }
      }
    }
  }
  return report;
}

GirthReport girth(const BipartiteGraph& graph) {
  GirthReport report;
  const int n = graph.num_vars();
  const int m = graph.num_checks();
  const int total = n + m;  // vars are 0..n-1, checks are n..n+m-1
  const int infinity = std::numeric_limits<int>::max();

  int best = infinity;
  std::vector<int> dist(static_cast<std::size_t>(total));
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::deque<int> queue;

  // Every shortest cycle passes through a variable node, so variable roots
  // suffice. BFS candidates dist[x]+dist[y]+1 over non-tree edges never
  // undershoot the girth and are tight for roots on a shortest cycle.
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), infinity);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    queue.clear();
    queue.push_back(root);
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      const int d = dist[static_cast<std::size_t>(node)];
      if (2 * d >= best) break;  // no shorter cycle reachable from here
      const bool is_var = node < n;
      const auto& neighbors =
          is_var ? graph.var_neighbors(node) : graph.check_neighbors(node - n);
      for (int other : neighbors) {
        const int other_node = is_var ? other + n : other;
        auto& od = dist[static_cast<std::size_t>(other_node)];
        if (od == infinity) {
          od = d + 1;
          parent[static_cast<std::size_t>(other_node)] = node;
          queue.push_back(other_node);
        } else if (other_node != parent[static_cast<std::size_t>(node)]) {
          best = std::min(best, d + od + 1);
        }
      }
    }
    if (best == 4) break;  // cannot improve further
  }

  if (best != infinity) {
    report.girth = best;
    if (best == 4) {
      GirthReport four = find_four_cycle(graph);
      report.has_four_cycle = true;
      report.four_cycle_witness = four.four_cycle_witness;
    }
  }
  return report;
}

std::map<int, int> var_degree_histogram(const BipartiteGraph& graph) {
  std::map<int, int> histogram;
  for (int var = 0; var < graph.num_vars(); ++var) ++histogram[graph.var_degree(var)];
  return histogram;
}

std::map<int, int> check_degree_histogram(const BipartiteGraph& graph) {
  std::map<int, int> histogram;
  for (int check = 0; check < graph.num_checks(); ++check) {
    ++histogram[graph.check_degree(check)];
  }
  return histogram;
}

bool is_four_cycle_saturated(const BipartiteGraph& graph) {
  const std::size_t m = static_cast<std::size_t>(graph.num_checks());
  for (int var = 0; var < graph.num_vars(); ++var) {
    SubgraphFloors floors = expand_floors(graph, var, 2);
    if (floors.c1.size() + floors.c2.size() != m) return false;
  }
  return true;
}

}  // namespace bgc
