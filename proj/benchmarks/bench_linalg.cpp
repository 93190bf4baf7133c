#include <benchmark/benchmark.h>

#include <random>

#include "jsplit/linalg.hpp"

namespace {

using namespace jsplit;

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  }
  return m;
}

void BM_RowReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(row_reduce(m).pivot_columns.size());
  }
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_SolveLinear(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(2 * n, n, 11);
  const RationalVector x(n, Rational(1));
  const auto b = a.apply(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_linear(a, b).solved());
  }
}
BENCHMARK(BM_SolveLinear)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace
