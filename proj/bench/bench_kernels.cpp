// Serial reference paths against the OpenMP kernels.
//   ./bench_kernels --benchmark_filter=Residues
// LEIBNIZ_LAB_THREADS caps the thread count of the parallel runs.

#include "leibniz/algebra.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/triangular.hpp"

#include <benchmark/benchmark.h>

using namespace leibniz;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_ScalarResidues(benchmark::State& state) {
  ScalarTable t = triangular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(leibniz_residues(t, mode(state)));
}

void BM_SymbolicResidues(benchmark::State& state) {
  PolyTable t = generic_extension(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(residue_polynomials(t, mode(state)));
}

void BM_DerivationAlgebra(benchmark::State& state) {
  ScalarTable t = triangular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(t, mode(state)));
}

}  // namespace

BENCHMARK(BM_ScalarResidues)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicResidues)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivationAlgebra)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
