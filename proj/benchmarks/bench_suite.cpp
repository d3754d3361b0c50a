#include <benchmark/benchmark.h>

#include "hfub/verify.hpp"

namespace {

void BM_VerifySuite(benchmark::State& state) {
  hfub::verify::RunOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfub::verify::run_suite(static_cast<int>(state.range(0)), {"all"}, options));
  }
}
BENCHMARK(BM_VerifySuite)->Args({32, 1})->Args({64, 1})->Args({64, 4})->Unit(benchmark::kMillisecond);

void BM_LambdaExpansionCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfub::verify::run_check("lambda-expansion", static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LambdaExpansionCheck)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
