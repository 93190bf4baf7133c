#include <benchmark/benchmark.h>

#include "jsplit/grassmann.hpp"
#include "jsplit/identities.hpp"
#include "jsplit/josp.hpp"

namespace {

using namespace jsplit;

void BM_SuperJordanJosp(benchmark::State& state) {
  const auto a = build_josp_table(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_super_jordan(a).holds());
  }
  state.counters["dim"] = static_cast<double>(a.dim());
}
BENCHMARK(BM_SuperJordanJosp)->Args({1, 1})->Args({2, 1})->Args({1, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_SupercommutativeJosp(benchmark::State& state) {
  const auto a = build_josp_table(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_supercommutative(a).holds());
  }
}
BENCHMARK(BM_SupercommutativeJosp)->Args({2, 1})->Args({2, 2});

void BM_GrassmannEnvelope(benchmark::State& state) {
  const auto a = build_josp_table(1, 1);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grassmann_envelope(a, k).dim());
  }
}
BENCHMARK(BM_GrassmannEnvelope)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnvelopePlainJordan(benchmark::State& state) {
  const auto env = grassmann_envelope(build_josp_table(1, 1), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_plain_jordan(env).holds());
  }
  state.counters["dim"] = static_cast<double>(env.dim());
}
BENCHMARK(BM_EnvelopePlainJordan)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
