#include <benchmark/benchmark.h>

#include <vector>

#include "scatlen/scatlen.hpp"

using namespace scatlen;

namespace {

void BM_ScatteringLength(benchmark::State& state) {
  const auto dim = dimension_from_int(static_cast<int>(state.range(0)));
  SolverConfig cfg;
  cfg.p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scattering_length(dim, 5.0, cfg));
}
BENCHMARK(BM_ScatteringLength)->ArgsProduct({{1, 2, 3}, {7, 11, 13}});

void BM_ScatteringLengthsBatch(benchmark::State& state) {
  std::vector<double> etas;
  for (int i = 0; i < state.range(0); ++i) etas.push_back(0.05 + 14.0 * i / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scattering_lengths(Dimension::three, etas));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScatteringLengthsBatch)->Arg(64)->Arg(512)->UseRealTime();

void BM_EnumeratePoles(benchmark::State& state) {
  const auto dim = dimension_from_int(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_poles(dim, 125.0));
}
BENCHMARK(BM_EnumeratePoles)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LsSolve(benchmark::State& state) {
  const auto dim = dimension_from_int(static_cast<int>(state.range(0)));
  LSGrid grid;
  grid.nodes = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ls_solve(dim, 3.0, grid));
}
BENCHMARK(BM_LsSolve)->ArgsProduct({{1, 2, 3}, {500, 2000}})->Unit(benchmark::kMicrosecond);

void BM_SeriesA1D(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(series_a1d(4.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesA1D)->Arg(30)->Arg(60);

void BM_FitModel(benchmark::State& state) {
  const auto dim = dimension_from_int(static_cast<int>(state.range(0)));
  const auto W = builtin_model(dim, 4).W;
  const auto data = sample_numeric(dim, fit_grid(paper_fit_spec(dim), W));
  for (auto _ : state) benchmark::DoNotOptimize(fit_model(dim, 4, W, data));
}
BENCHMARK(BM_FitModel)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_EvalModel(benchmark::State& state) {
  const auto m = builtin_model(Dimension::three, 4);
  double eta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_model(m, eta));
    eta = eta < 14.0 ? eta + 0.01 : 0.1;
  }
}
BENCHMARK(BM_EvalModel);

}  // namespace

BENCHMARK_MAIN();
