#include <benchmark/benchmark.h>

#include "hfub/combinat.hpp"
#include "hfub/families.hpp"
#include "hfub/transforms.hpp"

namespace {

// Each iteration uses fresh tables so the memo cost is measured, not a lookup.
void BM_SfRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hfub::Tables tables;
    benchmark::DoNotOptimize(tables.sf_row(n));
  }
}
BENCHMARK(BM_SfRow)->Arg(32)->Arg(64)->Arg(128);

void BM_BernoulliWorpitzky(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hfub::Tables tables;
    for (int m = 0; m <= n; ++m) benchmark::DoNotOptimize(tables.bernoulli(m));
  }
}
BENCHMARK(BM_BernoulliWorpitzky)->Arg(60)->Arg(120);

void BM_BernoulliAkiyamaTanigawa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfub::bernoulli_akiyama_tanigawa(n));
}
BENCHMARK(BM_BernoulliAkiyamaTanigawa)->Arg(60)->Arg(120);

void BM_LambdaRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    hfub::LambdaTable lambdas;
    benchmark::DoNotOptimize(lambdas.row(n));
  }
}
BENCHMARK(BM_LambdaRow)->Arg(16)->Arg(32)->Arg(64);

void BM_FubiniRec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfub::fubini_rec(n));
}
BENCHMARK(BM_FubiniRec)->Arg(16)->Arg(64);

void BM_HFubiniViaDerivatives(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hfub::hfubini_via_derivatives(n));
}
BENCHMARK(BM_HFubiniViaDerivatives)->Arg(16)->Arg(64);

void BM_ReflectAbout(benchmark::State& state) {
  const hfub::Polynomial p = hfub::lambda_poly(static_cast<int>(state.range(0)) + 1, 1);
  const hfub::Rational alpha(-1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hfub::reflect_about(p, alpha));
}
BENCHMARK(BM_ReflectAbout)->Arg(16)->Arg(64);

}  // namespace
