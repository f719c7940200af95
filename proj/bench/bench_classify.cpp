// Serial reference against the OpenMP kernel on the exhaustive search.

#include <benchmark/benchmark.h>

#include "bbwu/classify.hpp"

namespace {

bbwu::GrassmannSpace space(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto s = space(state);
  for (auto _ : state) benchmark::DoNotOptimize(bbwu::brute_force_classify_serial(s));
  state.counters["candidates"] = static_cast<double>(bbwu::candidate_count(s));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto s = space(state);
  const bbwu::ClassifyOptions options{.jobs = static_cast<int>(state.range(2))};
  for (auto _ : state) benchmark::DoNotOptimize(bbwu::brute_force_classify(s, options));
  state.counters["candidates"] = static_cast<double>(bbwu::candidate_count(s));
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->Args({2, 7})->Args({2, 8})->Args({3, 8})->Args({2, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)
    ->ArgsProduct({{2}, {7, 8, 9}, {1, 2, 4, 0}})
    ->Args({3, 8, 0})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
