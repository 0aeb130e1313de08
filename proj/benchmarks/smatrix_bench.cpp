#include <benchmark/benchmark.h>

#include "darboux/coupled_solver.hpp"
#include "darboux/scattering.hpp"

using namespace darboux;

namespace {

void BM_ClosedFormSMatrix(benchmark::State& state) {
  const KvGParameters p;
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_smatrix(p, k));
    k = k > 3.0 ? 0.1 : k + 0.01;
  }
}
BENCHMARK(BM_ClosedFormSMatrix);

void BM_NumericalSMatrix(benchmark::State& state) {
  const auto table = compute_potential(build_kvg_chain({}), RadialGrid::logarithmic(1e-2, 25.0, 2000));
  const double k = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(numerical_smatrix(table, k, {2, 0}));
}
BENCHMARK(BM_NumericalSMatrix)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
