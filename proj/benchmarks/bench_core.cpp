#include <benchmark/benchmark.h>

#include "koebe/hyp2f1.hpp"
#include "koebe/rational.hpp"
#include "koebe/shear.hpp"
#include "koebe/sup_search.hpp"
#include "koebe/differential.hpp"
#include "koebe/univalence.hpp"

namespace {

using koebe::Complex;

void BM_EvalF(benchmark::State& state) {
  const auto p = koebe::make_params(2.0, 0.5);
  const Complex z(0.6, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(koebe::eval_f(p, z));
}
BENCHMARK(BM_EvalF);

void BM_ClosedFormHg(benchmark::State& state) {
  const auto p = koebe::make_params(1.5, 0.5);
  const Complex z(0.6, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(koebe::closed_form_hg(p, z));
}
BENCHMARK(BM_ClosedFormHg);

void BM_HgSeriesExact(benchmark::State& state) {
  const koebe::Rational a(3, 2), l(1, 4);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koebe::hg_series<koebe::Rational>(a, l, n));
}
BENCHMARK(BM_HgSeriesExact)->Arg(8)->Arg(32);

void BM_HgSeriesDouble(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koebe::hg_series<double>(1.5, 0.25, n));
}
BENCHMARK(BM_HgSeriesDouble)->Arg(80)->Arg(1000);

void BM_SchwarzianNorm(benchmark::State& state) {
  const auto p = koebe::make_params(2.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(koebe::norm_estimate(koebe::NormKind::Schwarzian, p, koebe::kDefaultNormRadius));
  }
}
BENCHMARK(BM_SchwarzianNorm)->Unit(benchmark::kMillisecond);

void BM_InjectivityScan(benchmark::State& state) {
  const auto p = koebe::make_params(2.0, 0.5);
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koebe::injectivity_scan(p, 0.9, n));
}
BENCHMARK(BM_InjectivityScan)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
