#include <benchmark/benchmark.h>

#include "cansub/grid.hpp"
#include "cansub/hodge_tate.hpp"
#include "cansub/properness.hpp"
#include "cansub/torsion.hpp"

namespace {

using namespace cansub;

void BM_OracleValuation(benchmark::State& state) {
  const CurveParams params(3, make_rational(1, 36));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int a : admissible_depths(params, k)) benchmark::DoNotOptimize(oracle_valuation(params, {k, a}));
  }
}
BENCHMARK(BM_OracleValuation)->DenseRange(1, 5);

void BM_ClosedForm(benchmark::State& state) {
  const CurveParams params(3, make_rational(1, 36));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int a : admissible_depths(params, k)) benchmark::DoNotOptimize(closed_form_valuation(params, {k, a}));
  }
}
BENCHMARK(BM_ClosedForm)->DenseRange(1, 5);

void BM_FarguesSum(benchmark::State& state) {
  const HTClass cls(CurveParams(5, make_rational(1, 150)), ExtNat(1));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fargues_sum(cls, k));
}
BENCHMARK(BM_FarguesSum)->DenseRange(3, 8);

void BM_CircleDeterminant(benchmark::State& state) {
  const CircleSystem sys = circle_matrix(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(injectivity_verdict(sys));
}
BENCHMARK(BM_CircleDeterminant)->Arg(7)->Arg(31)->Arg(97);

void BM_BoundaryGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(boundary_grid(7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BoundaryGrid)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
