#include <benchmark/benchmark.h>

#include <random>

#include "darboux/scattering.hpp"
#include "darboux/stepwise.hpp"
#include "darboux/verification.hpp"

using namespace darboux;

namespace {

void BM_KvgPotentialSweep(benchmark::State& state) {
  const auto chain = build_kvg_chain({});
  const auto grid = RadialGrid::linear(0.01, 20.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_potential(chain, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_KvgPotentialSweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

// Cost of one potential sample against chain length N (one singular link).
void BM_PotentialAtChainLength(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto chain = random_chain(rng, {1, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(potential_at(chain, 1.7, {.require_real = false}));
}
BENCHMARK(BM_PotentialAtChainLength)->DenseRange(1, 6);

void BM_StepwisePotentialAtChainLength(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const StepwiseChain chain(random_chain(rng, {1, static_cast<std::size_t>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(chain.at(1.7));
}
BENCHMARK(BM_StepwisePotentialAtChainLength)->DenseRange(1, 6);

}  // namespace
