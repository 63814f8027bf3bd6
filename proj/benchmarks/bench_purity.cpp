#include <benchmark/benchmark.h>

#include "fockseries/entangle.hpp"

using namespace fockseries;

namespace {

// Arg: |alpha| in tenths at q = 0.5, k = 3; the per-arm dimension is
// reported as a counter.
void BM_LinearEntropy(benchmark::State& state) {
  const StateSpec spec{static_cast<double>(state.range(0)) / 10.0, 0.0, 3,
                       NonlinearityModel::penson_solomon(0.5)};
  const auto series = truncate(spec, AdaptiveTolerance{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(linear_entropy(series, spec, BeamSplitterSetting{}).purity);
  }
  state.counters["dimension"] = static_cast<double>(series.n_max() + 4);
}
BENCHMARK(BM_LinearEntropy)->Arg(5)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
