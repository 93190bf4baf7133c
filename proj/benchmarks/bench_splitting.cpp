#include <benchmark/benchmark.h>

#include "jsplit/bimodule.hpp"
#include "jsplit/josp.hpp"
#include "jsplit/splitting.hpp"

namespace {

using namespace jsplit;

void BM_SolveSplittingRegular(benchmark::State& state) {
  const auto a = build_josp_table(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const auto ext = perturb_section(marked_split_null_extension(regular_bimodule(a)),
                                   random_correction(marked_split_null_extension(regular_bimodule(a)), 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_splitting(ext));
  }
  state.counters["dim"] = static_cast<double>(ext.algebra.dim());
}
BENCHMARK(BM_SolveSplittingRegular)->Args({1, 1})->Args({2, 1})->Args({1, 2})->Unit(benchmark::kMillisecond);

void BM_SolveSplittingCounterexample(benchmark::State& state) {
  const auto ext = build_counterexample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_splitting(ext));
  }
}
BENCHMARK(BM_SolveSplittingCounterexample)->Unit(benchmark::kMicrosecond);

void BM_SplittingSystem(benchmark::State& state) {
  const auto ext = marked_split_null_extension(skew_bimodule(2, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(splitting_system(ext));
  }
}
BENCHMARK(BM_SplittingSystem)->Unit(benchmark::kMillisecond);

}  // namespace
