// bgc: deterministic girth-6 sensing-matrix construction, analysis, recovery,
// and phase-transition benchmarking from the command line.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bgc/basis_pursuit.hpp"
#include "bgc/bipartite_graph.hpp"
#include "bgc/coherence.hpp"
#include "bgc/construct.hpp"
#include "bgc/errors.hpp"
#include "bgc/graph_io.hpp"
#include "bgc/manifest.hpp"
#include "bgc/matrix_io.hpp"
#include "bgc/phase_transition.hpp"
#include "bgc/sensing_matrix.hpp"
#include "bgc/sparse_signal.hpp"
#include "bgc/version.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInputFormat = 3;
constexpr int kExitSolverFailure = 4;
constexpr int kExitIo = 5;

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string format_double(double value, const char* spec = "%g") {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, spec, value);
  return buffer;
}

void print_histogram(std::ostream& out, const char* label, const std::map<int, int>& histogram) {
  out << label;
  for (const auto& [degree, count] : histogram) out << ' ' << degree << ':' << count;
  out << '\n';
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 0;
  bool balance_checks = false;
  std::string out;
};

int run_construct(const ConstructArgs& args) {
  Timer timer;
  bgc::ConstructionConfig config;
  config.num_checks = args.rows;
  config.num_vars = args.cols;
  config.seed = args.seed;
  config.balance_checks = args.balance_checks;
  const bgc::ConstructionReport report = bgc::bgc_construct(config);

  bgc::RunManifest manifest;
  manifest.command = "construct";
  manifest.add("rows", static_cast<long long>(args.rows));
  manifest.add("cols", static_cast<long long>(args.cols));
  manifest.add("seed", static_cast<unsigned long long>(args.seed));
  manifest.add("balance_checks", args.balance_checks);
  bgc::write_graph_matrix_market(report.graph, std::filesystem::path(args.out),
                                 {manifest.comment_line()});

  std::cerr << "construct: " << report.num_edges << " edges, average column degree "
            << format_double(report.average_var_degree, "%.4f") << ", min degree "
            << report.min_var_degree << ", " << report.iterations_used << " iterations, "
            << format_double(timer.seconds(), "%.3f") << "s\n";
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// peg

struct PegArgs {
  int rows = 0;
  int cols = 0;
  int degree = 1;
  int retries = 100;
  std::uint64_t seed = 0;
  std::string out;
};

int run_peg(const PegArgs& args) {
  Timer timer;
  bgc::ConstructionConfig config;
  config.num_checks = args.rows;
  config.num_vars = args.cols;
  config.seed = args.seed;
  const bgc::PegResult result = bgc::peg_construct(config, args.degree, args.retries);

  bgc::RunManifest manifest;
  manifest.command = "peg";
  manifest.add("rows", static_cast<long long>(args.rows));
  manifest.add("cols", static_cast<long long>(args.cols));
  manifest.add("degree", static_cast<long long>(args.degree));
  manifest.add("retries", static_cast<long long>(args.retries));
  manifest.add("seed", static_cast<unsigned long long>(args.seed));
  bgc::write_graph_matrix_market(result.report.graph, std::filesystem::path(args.out),
                                 {manifest.comment_line()});

  std::cerr << "peg: degree " << args.degree << ", " << result.attempts_used << " attempt(s), "
            << (result.girth_ok ? "girth >= 6" : "still has 4-cycles") << ", "
            << format_double(timer.seconds(), "%.3f") << "s\n";
  if (!result.girth_ok) {
    throw SolverFailure("peg: no 4-cycle-free graph within " + std::to_string(args.retries) +
                        " retries (last attempt written to " + args.out + ")");
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
  int rows = 0;
  int cols = 0;
};

int run_estimate(const EstimateArgs& args) {
  const bgc::DegreeEstimate estimate = bgc::estimate_regular_degree(args.rows, args.cols);
  std::cout << "d_real " << format_double(estimate.d_real, "%.2f") << '\n';
  std::cout << "d_int " << estimate.d_int << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// matrix

struct MatrixArgs {
  std::string graph;
  std::string type;
  int rows = 0;
  int cols = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_matrix(const MatrixArgs& args) {
  bgc::RunManifest manifest;
  manifest.command = "matrix";
  manifest.add("type", args.type);

  bgc::SensingMatrix matrix;
  if (args.type == "gaussian") {
    if (args.rows < 1 || args.cols < 1) {
      throw CLI::ValidationError("matrix", "--type gaussian requires --rows and --cols");
    }
    matrix = bgc::sample_gaussian(args.rows, args.cols, args.seed);
    manifest.add("rows", static_cast<long long>(args.rows));
    manifest.add("cols", static_cast<long long>(args.cols));
    manifest.add("seed", static_cast<unsigned long long>(args.seed));
  } else {
    if (args.graph.empty()) {
      throw CLI::ValidationError("matrix", "--type " + args.type + " requires --graph");
    }
    const bgc::BipartiteGraph graph =
        bgc::read_graph_matrix_market(std::filesystem::path(args.graph));
    if (args.type == "binary") {
      matrix = bgc::realize_binary(graph);
    } else {
      matrix = bgc::realize_ternary(graph, args.seed);
      manifest.add("seed", static_cast<unsigned long long>(args.seed));
    }
    manifest.add("graph", args.graph);
  }
  bgc::write_matrix_market(matrix, std::filesystem::path(args.out), {manifest.comment_line()});
  std::cerr << "matrix: wrote " << matrix.rows() << "x" << matrix.cols() << " "
            << bgc::to_string(matrix.kind) << " matrix to " << args.out << '\n';
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string matrix;
};

int run_analyze(const AnalyzeArgs& args) {
  const bgc::SensingMatrix matrix = bgc::read_matrix_market(std::filesystem::path(args.matrix));
  const bgc::CoherenceReport report = bgc::coherence(matrix);

  std::cout << "kind " << bgc::to_string(matrix.kind) << '\n';
  std::cout << "rows " << matrix.rows() << '\n';
  std::cout << "cols " << matrix.cols() << '\n';
  std::cout << "mu " << format_double(report.mu, "%.6f") << '\n';
  std::cout << "k_bound " << report.k_bound << '\n';
  std::cout << "argmax_pair " << report.argmax_pair.first << ' ' << report.argmax_pair.second
            << '\n';

  std::map<int, int> column_histogram, row_histogram;
  for (int col = 0; col < matrix.cols(); ++col) {
    int nnz = 0;
    for (int row = 0; row < matrix.rows(); ++row) {
      if (matrix.entries(row, col) != 0.0) ++nnz;
    }
    ++column_histogram[nnz];
  }
  for (int row = 0; row < matrix.rows(); ++row) {
    int nnz = 0;
    for (int col = 0; col < matrix.cols(); ++col) {
      if (matrix.entries(row, col) != 0.0) ++nnz;
    }
    ++row_histogram[nnz];
  }
  print_histogram(std::cout, "column_degree_histogram", column_histogram);
  print_histogram(std::cout, "row_degree_histogram", row_histogram);
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// recover / oracle

struct RecoverArgs {
  std::string matrix;
  std::string signal;
  std::string out;
  double feas_tol = 1e-8;
  double opt_tol = 1e-8;
  int max_iterations = 0;
};

int run_recover(const RecoverArgs& args, bool use_oracle) {
  const bgc::SensingMatrix matrix = bgc::read_matrix_market(std::filesystem::path(args.matrix));
  const bgc::SparseSignal signal =
      bgc::read_signal(std::filesystem::path(args.signal), matrix.cols());
  const Eigen::VectorXd truth = signal.to_dense();
  const Eigen::VectorXd y = matrix.entries * truth;

  bgc::RecoveryOutcome outcome;
  if (use_oracle) {
    outcome = bgc::brute_force_l1(matrix.entries, y);
  } else {
    bgc::BasisPursuitOptions options;
    options.feas_tol = args.feas_tol;
    options.opt_tol = args.opt_tol;
    options.max_iterations = args.max_iterations;
    outcome = bgc::basis_pursuit(matrix, y, options);
  }
  outcome.relative_error = bgc::relative_error(truth, outcome.estimate);

  if (!args.out.empty()) {
    bgc::RunManifest manifest;
    manifest.command = use_oracle ? "oracle" : "recover";
    manifest.add("matrix", args.matrix);
    manifest.add("signal", args.signal);
    std::ofstream out(args.out);
    if (!out) throw bgc::IoError("cannot open " + args.out + " for writing");
    out << "# " << manifest.comment_line() << '\n';
    // Snap solver dust to zero so the written support is readable.
    Eigen::VectorXd cleaned = outcome.estimate;
    const double floor = 1e-12 * std::max(1.0, cleaned.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < cleaned.size(); ++i) {
      if (std::abs(cleaned(i)) <= floor) cleaned(i) = 0.0;
    }
    bgc::write_signal_entries(cleaned, out);
    if (!out) throw bgc::IoError("write to " + args.out + " failed");
  }

  const char* status = outcome.status == bgc::RecoveryStatus::optimal      ? "optimal"
                       : outcome.status == bgc::RecoveryStatus::infeasible ? "infeasible"
                                                                           : "iteration-limit";
  std::cout << "status " << status << '\n';
  std::cout << "relative_error " << format_double(*outcome.relative_error, "%.9g") << '\n';
  std::cout << "residual " << format_double(outcome.residual, "%.9g") << '\n';
  std::cout << "l1_norm " << format_double(outcome.objective, "%.9g") << '\n';
  if (outcome.status != bgc::RecoveryStatus::optimal) {
    throw SolverFailure(std::string("solver finished with status ") + status);
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string path;
  bool force_maximality = false;
  bool skip_maximality = false;
};

int run_verify(const VerifyArgs& args) {
  // Accept either a pattern graph file or a binary/ternary coordinate file.
  bgc::BipartiteGraph graph(1, 1);
  {
    std::ifstream probe(args.path);
    if (!probe) throw bgc::IoError("cannot open " + args.path + " for reading");
    std::string banner;
    std::getline(probe, banner);
    probe.close();
    if (banner.find("pattern") != std::string::npos) {
      graph = bgc::read_graph_matrix_market(std::filesystem::path(args.path));
    } else {
      const bgc::SensingMatrix matrix =
          bgc::read_matrix_market(std::filesystem::path(args.path));
      if (matrix.kind == bgc::MatrixKind::gaussian) {
        throw bgc::ParseError("verify expects a graph or a binary/ternary matrix file", 1);
      }
      graph = bgc::graph_from_matrix(matrix);
    }
  }

  const bgc::GirthReport girth_report = bgc::girth(graph);
  std::cout << "rows " << graph.num_checks() << '\n';
  std::cout << "cols " << graph.num_vars() << '\n';
  std::cout << "edges " << graph.num_edges() << '\n';
  std::cout << "has_four_cycle " << (girth_report.has_four_cycle ? "true" : "false") << '\n';
  if (girth_report.four_cycle_witness) {
    std::cout << "four_cycle_witness " << girth_report.four_cycle_witness->first << ' '
              << girth_report.four_cycle_witness->second << '\n';
  }
  if (girth_report.girth) {
    std::cout << "girth " << *girth_report.girth << '\n';
  } else {
    std::cout << "girth acyclic\n";
  }

  // The full maximality scan is quadratic-ish; on by default at small n.
  const bool run_maximality =
      args.force_maximality || (!args.skip_maximality && graph.num_vars() <= 512);
  if (run_maximality) {
    std::cout << "maximal " << (bgc::is_four_cycle_saturated(graph) ? "true" : "false") << '\n';
  } else {
    std::cout << "maximal skipped\n";
  }

  print_histogram(std::cout, "var_degree_histogram", bgc::var_degree_histogram(graph));
  print_histogram(std::cout, "check_degree_histogram", bgc::check_degree_histogram(graph));
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  int n = 100;
  std::string delta = "0.1:1:9";
  int trials = 200;
  std::string signal = "signed";
  std::string ensembles = "bgc-binary,bgc-ternary,gaussian";
  double bar = 0.99;
  double threshold = 1e-4;
  std::uint64_t seed = 0;
  std::string out;
  std::string summary;
  bool json = false;
  bool normalize_columns = false;
  int threads = 0;
  int max_k = 0;
  int hysteresis = 2;
};

std::vector<double> parse_delta_grid(const std::string& text) {
  std::vector<double> grid;
  const auto parse_value = [&](const std::string& token) {
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return value;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--delta", "cannot parse '" + token + "'");
    }
  };

  if (text.find(':') != std::string::npos) {
    // start:stop:steps, inclusive endpoints, `steps` equal intervals.
    std::istringstream in(text);
    std::string start_text, stop_text, steps_text;
    if (!std::getline(in, start_text, ':') || !std::getline(in, stop_text, ':') ||
        !std::getline(in, steps_text)) {
      throw CLI::ValidationError("--delta", "expected start:stop:steps");
    }
    const double start = parse_value(start_text);
    const double stop = parse_value(stop_text);
    int steps = 0;
    try {
      steps = std::stoi(steps_text);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--delta", "steps must be an integer");
    }
    if (steps < 1 || stop <= start) {
      throw CLI::ValidationError("--delta", "need steps >= 1 and stop > start");
    }
    for (int i = 0; i <= steps; ++i) {
      grid.push_back(start + (stop - start) * static_cast<double>(i) / steps);
    }
  } else {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) grid.push_back(parse_value(token));
    }
  }
  if (grid.empty()) throw CLI::ValidationError("--delta", "empty grid");
  return grid;
}

int run_bench(const BenchArgs& args) {
  Timer timer;
  bgc::BenchmarkPlan plan;
  plan.n = args.n;
  plan.delta_grid = parse_delta_grid(args.delta);
  plan.trials_per_point = args.trials;
  plan.ensembles.clear();
  {
    std::istringstream in(args.ensembles);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (!token.empty()) plan.ensembles.push_back(bgc::ensemble_from_string(token));
    }
  }
  if (args.signal == "signed") {
    plan.signing = bgc::Signing::signed_pm1;
  } else if (args.signal == "unsigned") {
    plan.signing = bgc::Signing::unsigned_one;
  } else {
    throw CLI::ValidationError("--signal", "expected signed or unsigned");
  }
  plan.success_rate_bar = args.bar;
  plan.success_threshold = args.threshold;
  plan.master_seed = args.seed;
  plan.normalize_columns = args.normalize_columns;
  plan.scan_hysteresis = args.hysteresis;
  plan.max_k = args.max_k;
  plan.threads = args.threads > 0
                     ? args.threads
                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  bgc::RunManifest manifest;
  manifest.command = "bench";
  manifest.add("n", static_cast<long long>(plan.n));
  manifest.add("delta", args.delta);
  manifest.add("trials", static_cast<long long>(plan.trials_per_point));
  manifest.add("signal", args.signal);
  manifest.add("ensembles", args.ensembles);
  manifest.add("bar", plan.success_rate_bar);
  manifest.add("threshold", plan.success_threshold);
  manifest.add("seed", static_cast<unsigned long long>(plan.master_seed));
  manifest.add("normalize_columns", plan.normalize_columns);
  manifest.add("hysteresis", static_cast<long long>(plan.scan_hysteresis));
  manifest.add("max_k", static_cast<long long>(plan.max_k));

  if (args.json) {
    const bgc::PhaseTransitionResult result = bgc::run_plan(plan, &std::cerr);
    std::ofstream out(args.out);
    if (!out) throw bgc::IoError("cannot open " + args.out + " for writing");
    out << bgc::result_to_json(result, manifest) << '\n';
    if (!out) throw bgc::IoError("write to " + args.out + " failed");
  } else {
    // Stream point rows as they complete; the summary follows at the end.
    std::ofstream out(args.out);
    if (!out) throw bgc::IoError("cannot open " + args.out + " for writing");
    out << "# " << manifest.comment_line() << '\n';
    out << "ensemble,delta,m,k,trials,successes,rate\n";
    const bgc::PointCallback on_point = [&](const bgc::PointResult& point) {
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.6f", point.rate());
      out << bgc::to_string(point.ensemble) << ',' << format_double(point.delta) << ','
          << point.m << ',' << point.k << ',' << point.trials << ',' << point.successes << ','
          << rate << '\n';
      out.flush();
    };
    const bgc::PhaseTransitionResult result = bgc::run_plan(plan, &std::cerr, on_point);
    if (!out) throw bgc::IoError("write to " + args.out + " failed");

    std::string summary_path = args.summary;
    if (summary_path.empty()) {
      summary_path = args.out;
      const auto dot = summary_path.rfind(".csv");
      if (dot != std::string::npos && dot == summary_path.size() - 4) {
        summary_path.replace(dot, 4, ".summary.csv");
      } else {
        summary_path += ".summary.csv";
      }
    }
    std::ofstream summary(summary_path);
    if (!summary) throw bgc::IoError("cannot open " + summary_path + " for writing");
    bgc::write_summary_csv(result, manifest, summary);
    if (!summary) throw bgc::IoError("write to " + summary_path + " failed");
    std::cerr << "bench: summary written to " << summary_path << '\n';
  }
  std::cerr << "bench: finished in " << format_double(timer.seconds(), "%.1f") << "s\n";
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Girth-6 bipartite-graph sensing matrices: construction, analysis, "
               "l1 recovery, and phase-transition benchmarks"};
  app.set_version_flag("--version", bgc::kVersion);
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a girth-6 maximal bipartite graph");
  construct->add_option("--rows", construct_args.rows, "Check nodes / matrix rows (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--cols", construct_args.cols, "Variable nodes / matrix columns (n)")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--seed", construct_args.seed, "Random seed")->envname("BGC_SEED");
  construct->add_flag("--balance-checks", construct_args.balance_checks,
                      "Restrict picks to minimum-degree checks");
  construct->add_option("--out", construct_args.out, "Output graph file (Matrix Market pattern)")
      ->required();

  PegArgs peg_args;
  auto* peg = app.add_subcommand("peg", "Progressive edge-growth baseline (uniform degree)");
  peg->add_option("--rows", peg_args.rows, "Check nodes / matrix rows (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  peg->add_option("--cols", peg_args.cols, "Variable nodes / matrix columns (n)")
      ->required()
      ->check(CLI::PositiveNumber);
  peg->add_option("--degree", peg_args.degree, "Uniform column degree")
      ->required()
      ->check(CLI::PositiveNumber);
  peg->add_option("--retries", peg_args.retries, "Retry budget on 4-cycles")
      ->check(CLI::NonNegativeNumber);
  peg->add_option("--seed", peg_args.seed, "Random seed")->envname("BGC_SEED");
  peg->add_option("--out", peg_args.out, "Output graph file")->required();

  EstimateArgs estimate_args;
  auto* estimate = app.add_subcommand("estimate", "Regular-degree estimate for a matrix size");
  estimate->add_option("--rows", estimate_args.rows, "Matrix rows (m)")
      ->required()
      ->check(CLI::PositiveNumber);
  estimate->add_option("--cols", estimate_args.cols, "Matrix columns (n)")
      ->required()
      ->check(CLI::PositiveNumber);

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Realize a sensing matrix");
  matrix->add_option("--graph", matrix_args.graph, "Input graph (for binary/ternary)");
  matrix->add_option("--type", matrix_args.type, "binary | ternary | gaussian")
      ->required()
      ->check(CLI::IsMember({"binary", "ternary", "gaussian"}));
  matrix->add_option("--rows", matrix_args.rows, "Rows (gaussian only)");
  matrix->add_option("--cols", matrix_args.cols, "Columns (gaussian only)");
  matrix->add_option("--seed", matrix_args.seed, "Random seed (ternary signs / gaussian draws)")
      ->envname("BGC_SEED");
  matrix->add_option("--out", matrix_args.out, "Output matrix file (Matrix Market)")->required();

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Coherence and degree report for a matrix file");
  analyze->add_option("--matrix", analyze_args.matrix, "Input matrix file")->required();

  RecoverArgs recover_args;
  auto* recover = app.add_subcommand("recover", "Basis-pursuit recovery of a sparse signal");
  recover->add_option("--matrix", recover_args.matrix, "Sensing matrix file")->required();
  recover->add_option("--signal", recover_args.signal, "True signal (index:value pairs)")
      ->required();
  recover->add_option("--out", recover_args.out, "Write the estimate here");
  recover->add_option("--feas-tol", recover_args.feas_tol, "Feasibility tolerance");
  recover->add_option("--opt-tol", recover_args.opt_tol, "Optimality tolerance");
  recover->add_option("--max-iters", recover_args.max_iterations, "Simplex iteration cap");

  RecoverArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-l1 recovery (n <= 14)");
  oracle->add_option("--matrix", oracle_args.matrix, "Sensing matrix file")->required();
  oracle->add_option("--signal", oracle_args.signal, "True signal (index:value pairs)")
      ->required();
  oracle->add_option("--out", oracle_args.out, "Write the estimate here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Girth / maximality audit of a graph or matrix file");
  verify->add_option("path", verify_args.path, "Graph or binary/ternary matrix file")->required();
  verify->add_flag("--maximality", verify_args.force_maximality,
                   "Force the full maximality scan regardless of size");
  verify->add_flag("--skip-maximality", verify_args.skip_maximality,
                   "Skip the full maximality scan");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Phase-transition sweep over delta = m/n");
  bench->add_option("--n", bench_args.n, "Signal dimension (columns)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--delta", bench_args.delta, "Grid: start:stop:steps or comma list");
  bench->add_option("--trials", bench_args.trials, "Trials per (delta, k) point")
      ->check(CLI::PositiveNumber);
  bench->add_option("--signal", bench_args.signal, "signed | unsigned")
      ->check(CLI::IsMember({"signed", "unsigned"}));
  bench->add_option("--ensembles", bench_args.ensembles, "Comma list of ensembles");
  bench->add_option("--bar", bench_args.bar, "Success-rate bar for k*");
  bench->add_option("--threshold", bench_args.threshold, "Relative-error success threshold");
  bench->add_option("--seed", bench_args.seed, "Master seed")->envname("BGC_SEED");
  bench->add_option("--out", bench_args.out, "Output CSV (or JSON with --json)")->required();
  bench->add_option("--summary", bench_args.summary, "Summary CSV path (default: <out>.summary.csv)");
  bench->add_flag("--json", bench_args.json, "Emit one JSON document instead of CSVs");
  bench->add_flag("--normalize-columns", bench_args.normalize_columns,
                  "Normalize matrix columns before decoding");
  bench->add_option("--threads", bench_args.threads, "Worker threads (default: all cores)")
      ->envname("BGC_THREADS");
  bench->add_option("--max-k", bench_args.max_k, "Cap the k scan (default: min(m, n))");
  bench->add_option("--hysteresis", bench_args.hysteresis,
                    "Extra k values scanned past the first sub-bar point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (app.got_subcommand(construct)) return run_construct(construct_args);
    if (app.got_subcommand(peg)) return run_peg(peg_args);
    if (app.got_subcommand(estimate)) return run_estimate(estimate_args);
    if (app.got_subcommand(matrix)) return run_matrix(matrix_args);
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
    if (app.got_subcommand(recover)) return run_recover(recover_args, false);
    if (app.got_subcommand(oracle)) return run_recover(oracle_args, true);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(bench)) return run_bench(bench_args);
  } catch (const CLI::Error& error) {
    std::cerr << "error (usage): " << error.what() << '\n';
    return kExitUsage;
  } catch (const bgc::ParseError& error) {
    std::cerr << "error (input-format): " << error.what() << '\n';
    return kExitInputFormat;
  } catch (const bgc::IoError& error) {
    std::cerr << "error (io): " << error.what() << '\n';
    return kExitIo;
  } catch (const SolverFailure& error) {
    std::cerr << "error (solver): " << error.what() << '\n';
    return kExitSolverFailure;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error (input-format): " << error.what() << '\n';
    return kExitInputFormat;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
