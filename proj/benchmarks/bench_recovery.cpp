#include <benchmark/benchmark.h>

#include "bgc/basis_pursuit.hpp"
#include "bgc/construct.hpp"
#include "bgc/sensing_matrix.hpp"
#include "bgc/sparse_signal.hpp"

namespace {

void BM_BasisPursuitBinary(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  bgc::ConstructionConfig config;
  config.num_checks = m;
  config.num_vars = n;
  config.seed = 3;
  const bgc::SensingMatrix matrix = bgc::realize_binary(bgc::bgc_construct(config).graph);

  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Eigen::VectorXd truth =
        bgc::generate_signal(n, k, bgc::Signing::signed_pm1, seed++).to_dense();
    const Eigen::VectorXd y = matrix.entries * truth;
    benchmark::DoNotOptimize(bgc::basis_pursuit(matrix, y));
  }
}
BENCHMARK(BM_BasisPursuitBinary)->Args({30, 100, 4})->Args({50, 100, 8})->Args({90, 100, 20});

void BM_BasisPursuitGaussian(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  const bgc::SensingMatrix matrix = bgc::sample_gaussian(m, n, 5);

  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Eigen::VectorXd truth =
        bgc::generate_signal(n, k, bgc::Signing::signed_pm1, seed++).to_dense();
    const Eigen::VectorXd y = matrix.entries * truth;
    benchmark::DoNotOptimize(bgc::basis_pursuit(matrix, y));
  }
}
BENCHMARK(BM_BasisPursuitGaussian)->Args({50, 100, 8})->Args({90, 100, 20});

void BM_BruteForceOracle(benchmark::State& state) {
  const bgc::SensingMatrix matrix = bgc::sample_gaussian(6, 12, 5);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Eigen::VectorXd truth =
        bgc::generate_signal(12, 3, bgc::Signing::signed_pm1, seed++).to_dense();
    const Eigen::VectorXd y = matrix.entries * truth;
    benchmark::DoNotOptimize(bgc::brute_force_l1(matrix.entries, y));
  }
}
BENCHMARK(BM_BruteForceOracle);

}  // namespace

BENCHMARK_MAIN();
