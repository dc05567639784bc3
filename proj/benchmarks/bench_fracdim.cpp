#include <benchmark/benchmark.h>

#include "fracdim/geometry.hpp"
#include "fracdim/higuchi.hpp"
#include "fracdim/series.hpp"
#include "fracdim/signals.hpp"
#include "fracdim/variation.hpp"

namespace {

using namespace fracdim;

void BM_HfdHalfRule(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TimeSeries ts = sample(Oscillation{20.0}, n);
  for (auto _ : state) benchmark::DoNotOptimize(hfd(ts, max_admissible_k(n)).dimension);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HfdHalfRule)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_HfdFixedK(benchmark::State& state) {
  const TimeSeries ts = sample(Oscillation{20.0}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hfd(ts, 2).dimension);
}
BENCHMARK(BM_HfdFixedK)->RangeMultiplier(10)->Range(100, 1000000);

void BM_WeierstrassSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(Weierstrass{}, n).at(n));
}
BENCHMARK(BM_WeierstrassSample)->Arg(1000);

void BM_BoxDimension(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_dim_estimate(Oscillation{20.0}, kDefaultDeltaMin, kDefaultDeltaMax,
                                              kDefaultDeltaLevels, kDefaultSamplesPerColumn)
                                 .dimension);
  }
}
BENCHMARK(BM_BoxDimension);

void BM_UniformVariation(benchmark::State& state) {
  const Partition p = uniform_partition(static_cast<std::size_t>(state.range(0)));
  const SignalFunction f = make_function(Oscillation{20.0});
  for (auto _ : state) benchmark::DoNotOptimize(variation_over_partition(f, p));
}
BENCHMARK(BM_UniformVariation)->RangeMultiplier(16)->Range(64, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
