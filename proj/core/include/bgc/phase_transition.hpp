#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgc/manifest.hpp"
#include "bgc/sparse_signal.hpp"

namespace bgc {

enum class Ensemble { bgc_binary, bgc_ternary, gaussian };

std::string to_string(Ensemble ensemble);
Ensemble ensemble_from_string(const std::string& name);
std::string to_string(Signing signing);

struct BenchmarkPlan {
  int n = 100;                      // signal dimension (matrix columns)
  std::vector<double> delta_grid;   // strictly increasing, in (0, 1]
  int trials_per_point = 200;
  std::vector<Ensemble> ensembles{Ensemble::bgc_binary, Ensemble::bgc_ternary,
                                  Ensemble::gaussian};
  Signing signing = Signing::signed_pm1;
  double success_threshold = 1e-4;  // per-trial relative-error bar
  double success_rate_bar = 0.99;   // rate must exceed this to count for k*
  std::uint64_t master_seed = 0;
  bool normalize_columns = false;
  int scan_hysteresis = 2;  // extra k values scanned past the first sub-bar one
  int max_k = 0;            // 0 = min(m, n) per point
  int threads = 1;          // trial-level parallelism inside a point
};

struct PointResult {
  Ensemble ensemble;
  double delta = 0.0;
  int m = 0;
  int k = 0;
  int trials = 0;
  int successes = 0;

  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

struct TransitionPoint {
  Ensemble ensemble;
  double delta = 0.0;
  int m = 0;
  int k_star = 0;  // largest scanned k with rate > bar; 0 if none
};

struct PhaseTransitionResult {
  BenchmarkPlan plan;
  std::vector<PointResult> points;
  std::vector<TransitionPoint> curve;
};

/// Success count over `trials` at one (ensemble, m, n, k) cell. The BGC graph
/// is a function of (seed) alone and is shared by every trial; ternary signs,
/// Gaussian draws, and signals are refreshed per trial from positional
/// seeds, so any execution order gives identical counts.
int run_point(Ensemble ensemble, int m, int n, int k, Signing signing, int trials,
              std::uint64_t seed, double success_threshold, bool normalize_columns = false,
              int threads = 1, std::ostream* log = nullptr);

using PointCallback = std::function<void(const PointResult&)>;

/// Full sweep: for each ensemble and delta, scans k upward and stops
/// `scan_hysteresis` values after the success rate first drops below the
/// bar. Completed points stream through `on_point` as they finish.
PhaseTransitionResult run_plan(const BenchmarkPlan& plan, std::ostream* log = nullptr,
                               const PointCallback& on_point = {});

void write_points_csv(const PhaseTransitionResult& result, const RunManifest& manifest,
                      std::ostream& out);
void write_summary_csv(const PhaseTransitionResult& result, const RunManifest& manifest,
                       std::ostream& out);
std::string result_to_json(const PhaseTransitionResult& result, const RunManifest& manifest);

}  // namespace bgc
