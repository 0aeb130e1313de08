#include <benchmark/benchmark.h>

#include <random>

#include "darboux/detkit.hpp"

using namespace darboux;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (auto& x : m.storage()) x = {g(rng), g(rng)};
  return m;
}

IntegerMatrix random_integer_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  IntegerMatrix m(n, n);
  for (auto& x : m.storage()) x = d(rng);
  return m;
}

void BM_LogDeterminant(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(log_determinant(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogDeterminant)->RangeMultiplier(2)->Range(2, 64)->Complexity(benchmark::oNCubed);

void BM_ExactDeterminant(benchmark::State& state) {
  const auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_determinant(m));
}
BENCHMARK(BM_ExactDeterminant)->DenseRange(2, 12, 2);

void BM_SylvesterCheck(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_check(m, 1));
}
BENCHMARK(BM_SylvesterCheck)->DenseRange(3, 9, 2);

}  // namespace
