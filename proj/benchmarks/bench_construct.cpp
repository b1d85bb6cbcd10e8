#include <benchmark/benchmark.h>

#include "bgc/bipartite_graph.hpp"
#include "bgc/coherence.hpp"
#include "bgc/construct.hpp"
#include "bgc/sensing_matrix.hpp"

namespace {

void BM_BgcConstruct(benchmark::State& state) {
  bgc::ConstructionConfig config;
  config.num_checks = static_cast<int>(state.range(0));
  config.num_vars = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(bgc::bgc_construct(config));
  }
}
BENCHMARK(BM_BgcConstruct)->Args({50, 100})->Args({150, 300})->Args({100, 1000})->Args({500, 500});

void BM_PegConstruct(benchmark::State& state) {
  bgc::ConstructionConfig config;
  config.num_checks = static_cast<int>(state.range(0));
  config.num_vars = static_cast<int>(state.range(1));
  const int degree = static_cast<int>(state.range(2));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(bgc::peg_construct(config, degree, 100));
  }
}
BENCHMARK(BM_PegConstruct)->Args({50, 100, 4})->Args({250, 500, 8});

void BM_Girth(benchmark::State& state) {
  bgc::ConstructionConfig config;
  config.num_checks = static_cast<int>(state.range(0));
  config.num_vars = static_cast<int>(state.range(1));
  config.seed = 1;
  const bgc::BipartiteGraph graph = bgc::bgc_construct(config).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgc::girth(graph));
  }
}
BENCHMARK(BM_Girth)->Args({50, 100})->Args({500, 500});

void BM_Coherence(benchmark::State& state) {
  bgc::ConstructionConfig config;
  config.num_checks = static_cast<int>(state.range(0));
  config.num_vars = static_cast<int>(state.range(1));
  config.seed = 1;
  const bgc::SensingMatrix matrix = bgc::realize_binary(bgc::bgc_construct(config).graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bgc::coherence(matrix));
  }
}
BENCHMARK(BM_Coherence)->Args({50, 100})->Args({150, 300});

}  // namespace

BENCHMARK_MAIN();
