// Serial vs OpenMP timings for the parallel kernels. Arg 0 is serial, 1 OpenMP.

#include <benchmark/benchmark.h>

#include <cmath>

#include "wtrv/fit.hpp"
#include "wtrv/gof.hpp"
#include "wtrv/parallel.hpp"
#include "wtrv/wtrv.hpp"

using namespace wtrv;

namespace {

parallel::Mode mode_of(const benchmark::State& state) {
  return state.range(0) ? parallel::Mode::openmp : parallel::Mode::serial;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) ? "openmp" : "serial");
}

const std::vector<double>& synthetic() {
  static const std::vector<double> xs = sample(*weighted_kumaraswamy(2.0, 13.0, 6.0), 2000, 11);
  return xs;
}

void BM_mc_weight_mean(benchmark::State& state) {
  auto d = gamma_dist(2.0, 1.0);
  auto w = power_weight(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::mc_weight_mean(*d, w, 200000, 7, mode_of(state)));
  set_label(state);
}

void BM_multistart_fit(benchmark::State& state) {
  FitOptions opts;
  opts.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(fit_values(synthetic(), Model::wk, opts));
  set_label(state);
}

void BM_bootstrap(benchmark::State& state) {
  const auto& xs = synthetic();
  const std::vector<double> small(xs.begin(), xs.begin() + 200);
  BootstrapOptions opts;
  opts.replicates = 99;
  opts.refit_starts = 2;
  opts.mode = mode_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(bootstrap_pvalue(small, Model::kw, {2.0, 10.0}, GofTest::ks, opts));
  set_label(state);
}

void BM_evaluate_grid(benchmark::State& state) {
  auto x = construct(weibull(1.7, 2.0), power_weight(0.5));
  std::vector<double> grid;
  for (int i = 1; i <= 4096; ++i) grid.push_back(i * 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::evaluate_grid([&](double t) { return x->cdf(t); }, grid, mode_of(state)));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_mc_weight_mean)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multistart_fit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bootstrap)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evaluate_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
