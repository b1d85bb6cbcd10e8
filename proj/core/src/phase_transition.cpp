#include "bgc/phase_transition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "bgc/basis_pursuit.hpp"
#include "bgc/construct.hpp"
#include "bgc/rng.hpp"
#include "bgc/sensing_matrix.hpp"

namespace bgc {

namespace {

// Positional seed streams; fixed constants keep the derivations disjoint.
constexpr std::uint64_t kGraphStream = 0x67726170;   // shared across k and trials
constexpr std::uint64_t kSignalStream = 1;
constexpr std::uint64_t kMatrixStream = 2;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

}  // namespace

std::string to_string(Ensemble ensemble) {
  switch (ensemble) {
    case Ensemble::bgc_binary: return "bgc-binary";
    case Ensemble::bgc_ternary: return "bgc-ternary";
    case Ensemble::gaussian: return "gaussian";
  }
  throw std::logic_error("unknown ensemble");
}

Ensemble ensemble_from_string(const std::string& name) {
  if (name == "bgc-binary") return Ensemble::bgc_binary;
  if (name == "bgc-ternary") return Ensemble::bgc_ternary;
  if (name == "gaussian") return Ensemble::gaussian;
  throw std::invalid_argument("unknown ensemble '" + name +
                              "' (expected bgc-binary, bgc-ternary, or gaussian)");
}

std::string to_string(Signing signing) {
  return signing == Signing::signed_pm1 ? "signed" : "unsigned";
}

namespace {

struct TrialContext {
  Ensemble ensemble;
  int m = 0;
  int n = 0;
  int k = 0;
  Signing signing;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  bool normalize_columns = false;
  const BipartiteGraph* graph = nullptr;      // bgc ensembles
  const SensingMatrix* binary = nullptr;      // fixed deterministic matrix
};

bool run_trial(const TrialContext& context, int trial, std::ostream* log) {
  const std::uint64_t trial_seed =
      derive_seed(context.seed, static_cast<std::uint64_t>(context.k),
                  static_cast<std::uint64_t>(trial));

  SensingMatrix matrix;
  const SensingMatrix* matrix_ptr = nullptr;
  switch (context.ensemble) {
    case Ensemble::bgc_binary:
      matrix_ptr = context.binary;
      break;
    case Ensemble::bgc_ternary:
      matrix = realize_ternary(*context.graph, derive_seed(trial_seed, kMatrixStream));
      matrix_ptr = &matrix;
      break;
    case Ensemble::gaussian:
      matrix = sample_gaussian(context.m, context.n, derive_seed(trial_seed, kMatrixStream));
      matrix_ptr = &matrix;
      break;
  }

  const SparseSignal signal = generate_signal(context.n, context.k, context.signing,
                                              derive_seed(trial_seed, kSignalStream));
  const Eigen::VectorXd truth = signal.to_dense();

  const Eigen::MatrixXd* A = &matrix_ptr->entries;
  Eigen::MatrixXd normalized;
  if (context.normalize_columns) {
    normalized = matrix_ptr->entries;
    for (Eigen::Index col = 0; col < normalized.cols(); ++col) {
      const double norm = normalized.col(col).norm();
      if (norm > 0) normalized.col(col) /= norm;
    }
    A = &normalized;
  }

  const Eigen::VectorXd y = (*A) * truth;
  RecoveryOutcome outcome = basis_pursuit(*A, y);
  if (outcome.status != RecoveryStatus::optimal) {
    if (log) {
      (*log) << "trial " << trial << " at (m=" << context.m << ", k=" << context.k
             << "): solver status " << static_cast<int>(outcome.status) << ", counted as failure\n";
    }
    return false;
  }
  return relative_error(truth, outcome.estimate) < context.threshold;
}

}  // namespace

int run_point(Ensemble ensemble, int m, int n, int k, Signing signing, int trials,
              std::uint64_t seed, double success_threshold, bool normalize_columns, int threads,
              std::ostream* log) {
  if (m < 1 || n < 1) throw std::invalid_argument("run_point needs m >= 1 and n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("run_point needs 0 <= k <= n");
  if (trials < 1) throw std::invalid_argument("run_point needs at least one trial");

  TrialContext context;
  context.ensemble = ensemble;
  context.m = m;
  context.n = n;
  context.k = k;
  context.signing = signing;
  context.seed = seed;
  context.threshold = success_threshold;
  context.normalize_columns = normalize_columns;

  // One deterministic graph per (m, n, seed): a fixed construction swept
  // over fresh signals, with only the sign/Gaussian layers per-trial.
  BipartiteGraph graph(1, 1);
  SensingMatrix binary;
  if (ensemble != Ensemble::gaussian) {
    ConstructionConfig config;
    config.num_checks = m;
    config.num_vars = n;
    config.seed = derive_seed(seed, kGraphStream);
    graph = bgc_construct(config).graph;
    context.graph = &graph;
    if (ensemble == Ensemble::bgc_binary) {
      binary = realize_binary(graph);
      context.binary = &binary;
    }
  }

  const int worker_count = std::max(1, threads);
  if (worker_count == 1 || trials == 1) {
    int successes = 0;
    for (int trial = 0; trial < trials; ++trial) {
      if (run_trial(context, trial, log)) ++successes;
    }
    return successes;
  }

  // Positional seeds make the count independent of the schedule.
  std::vector<int> partial(static_cast<std::size_t>(worker_count), 0);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w]() {
      int local = 0;
      for (int trial = w; trial < trials; trial += worker_count) {
        if (run_trial(context, trial, nullptr)) ++local;
      }
      partial[static_cast<std::size_t>(w)] = local;
    });
  }
  for (auto& worker : workers) worker.join();
  int successes = 0;
  for (int value : partial) successes += value;
  return successes;
}

namespace {

void validate_plan(const BenchmarkPlan& plan) {
  if (plan.n < 1) throw std::invalid_argument("plan needs n >= 1");
  if (plan.trials_per_point < 1) throw std::invalid_argument("plan needs trials >= 1");
  if (plan.delta_grid.empty()) throw std::invalid_argument("plan needs a delta grid");
  if (plan.ensembles.empty()) throw std::invalid_argument("plan needs at least one ensemble");
  if (plan.success_rate_bar <= 0.0 || plan.success_rate_bar >= 1.0) {
    throw std::invalid_argument("success_rate_bar must lie in (0, 1)");
  }
  double previous = 0.0;
  for (double delta : plan.delta_grid) {
    if (delta <= previous || delta > 1.0) {
      throw std::invalid_argument("delta grid must be strictly increasing within (0, 1]");
    }
    previous = delta;
    if (static_cast<int>(std::lround(delta * plan.n)) < 1) {
      throw std::invalid_argument("delta grid entry gives m < 1");
    }
  }
}

}  // namespace

PhaseTransitionResult run_plan(const BenchmarkPlan& plan, std::ostream* log,
                               const PointCallback& on_point) {
  validate_plan(plan);
  PhaseTransitionResult result;
  result.plan = plan;

  for (std::size_t e = 0; e < plan.ensembles.size(); ++e) {
    const Ensemble ensemble = plan.ensembles[e];
    for (std::size_t d = 0; d < plan.delta_grid.size(); ++d) {
      const double delta = plan.delta_grid[d];
      const int m = static_cast<int>(std::lround(delta * plan.n));
      // Seeds depend on the delta index only: the graph-based ensembles
      // share one construction per (m, n) and all ensembles decode the same
      // per-trial signals, so ensemble comparisons are paired.
      const std::uint64_t point_seed =
          derive_seed(plan.master_seed, static_cast<std::uint64_t>(d));
      const int k_cap = plan.max_k > 0 ? std::min(plan.max_k, plan.n) : std::min(m, plan.n);

      int k_star = 0;
      int last_above_bar = 0;
      for (int k = 1; k <= k_cap; ++k) {
        PointResult point;
        point.ensemble = ensemble;
        point.delta = delta;
        point.m = m;
        point.k = k;
        point.trials = plan.trials_per_point;
        point.successes =
            run_point(ensemble, m, plan.n, k, plan.signing, plan.trials_per_point, point_seed,
                      plan.success_threshold, plan.normalize_columns, plan.threads, log);
        result.points.push_back(point);
        if (on_point) on_point(point);
        if (log) {
          (*log) << to_string(ensemble) << " delta=" << format_double(delta) << " m=" << m
                 << " k=" << k << " rate=" << format_double(point.rate()) << '\n';
        }
        if (point.rate() > plan.success_rate_bar) {
          last_above_bar = k;
          k_star = k;
        } else if (k - last_above_bar > plan.scan_hysteresis) {
          break;
        }
      }
      result.curve.push_back(TransitionPoint{ensemble, delta, m, k_star});
    }
  }
  return result;
}

void write_points_csv(const PhaseTransitionResult& result, const RunManifest& manifest,
                      std::ostream& out) {
  out << "# " << manifest.comment_line() << '\n';
  out << "ensemble,delta,m,k,trials,successes,rate\n";
  char rate[32];
  for (const auto& point : result.points) {
    std::snprintf(rate, sizeof rate, "%.6f", point.rate());
    out << to_string(point.ensemble) << ',' << format_double(point.delta) << ',' << point.m << ','
        << point.k << ',' << point.trials << ',' << point.successes << ',' << rate << '\n';
  }
}

void write_summary_csv(const PhaseTransitionResult& result, const RunManifest& manifest,
                       std::ostream& out) {
  out << "# " << manifest.comment_line() << '\n';
  out << "ensemble,delta,k_star\n";
  for (const auto& point : result.curve) {
    out << to_string(point.ensemble) << ',' << format_double(point.delta) << ',' << point.k_star
        << '\n';
  }
}

std::string result_to_json(const PhaseTransitionResult& result, const RunManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["manifest"] = nlohmann::ordered_json::parse(manifest.to_json());

  nlohmann::ordered_json plan;
  plan["n"] = result.plan.n;
  plan["delta_grid"] = result.plan.delta_grid;
  plan["trials_per_point"] = result.plan.trials_per_point;
  std::vector<std::string> ensemble_names;
  for (Ensemble ensemble : result.plan.ensembles) ensemble_names.push_back(to_string(ensemble));
  plan["ensembles"] = ensemble_names;
  plan["signing"] = to_string(result.plan.signing);
  plan["success_threshold"] = result.plan.success_threshold;
  plan["success_rate_bar"] = result.plan.success_rate_bar;
  plan["master_seed"] = result.plan.master_seed;
  plan["normalize_columns"] = result.plan.normalize_columns;
  plan["scan_hysteresis"] = result.plan.scan_hysteresis;
  doc["plan"] = plan;

  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& point : result.points) {
    nlohmann::ordered_json row;
    row["ensemble"] = to_string(point.ensemble);
    row["delta"] = point.delta;
    row["m"] = point.m;
    row["k"] = point.k;
    row["trials"] = point.trials;
    row["successes"] = point.successes;
    points.push_back(row);
  }
  doc["points"] = points;

  nlohmann::ordered_json curve = nlohmann::ordered_json::array();
  for (const auto& point : result.curve) {
    nlohmann::ordered_json row;
    row["ensemble"] = to_string(point.ensemble);
    row["delta"] = point.delta;
    row["m"] = point.m;
    row["k_star"] = point.k_star;
    curve.push_back(row);
  }
  doc["curve"] = curve;
  return doc.dump(2);
}

}  // namespace bgc
