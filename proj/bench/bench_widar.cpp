// Serial reference vs OpenMP corpus scoring, and the two Kendall tau paths.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "widar/corpus.hpp"
#include "widar/meta_eval.hpp"
#include "widar/scoring.hpp"

namespace {

const std::vector<widar::EvalRecord>& corpus() {
  static const auto records = widar::synthetic_corpus({});
  return records;
}

void BM_ScoreSerial(benchmark::State& state) {
  const widar::MetricConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(widar::score_corpus_serial(corpus(), cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}
BENCHMARK(BM_ScoreSerial)->Unit(benchmark::kMillisecond);

void BM_ScoreParallel(benchmark::State& state) {
  const widar::MetricConfig cfg;
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(widar::score_corpus_parallel(corpus(), cfg, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}
BENCHMARK(BM_ScoreParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

std::pair<std::vector<double>, std::vector<double>> sequences(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(1, 15);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = d(rng) / 3.0;
    y[i] = d(rng) / 3.0;
  }
  return {x, y};
}

void BM_KendallNaive(benchmark::State& state) {
  const auto [x, y] = sequences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(widar::kendall_tau_naive(x, y));
}
BENCHMARK(BM_KendallNaive)->Arg(100)->Arg(1600)->Arg(10000);

void BM_KendallFast(benchmark::State& state) {
  const auto [x, y] = sequences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(widar::kendall_tau(x, y));
}
BENCHMARK(BM_KendallFast)->Arg(100)->Arg(1600)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
