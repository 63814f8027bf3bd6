#include <benchmark/benchmark.h>

#include <cmath>

#include "fockseries/statistics.hpp"

using namespace fockseries;

namespace {

// Arg: |alpha| in tenths. q = 0.5, k = 3, so the term count grows like
// |alpha|^2 * 64.
void BM_AdaptiveTruncate(benchmark::State& state) {
  const StateSpec spec{static_cast<double>(state.range(0)) / 10.0, 0.0, 3,
                       NonlinearityModel::penson_solomon(0.5)};
  std::size_t terms = 0;
  for (auto _ : state) {
    const auto series = truncate(spec, AdaptiveTolerance{});
    terms = series.log_weights.size();
    benchmark::DoNotOptimize(series.log_total);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_AdaptiveTruncate)->Arg(5)->Arg(10)->Arg(20)->Arg(50);

void BM_MandelQ(benchmark::State& state) {
  const StateSpec spec{static_cast<double>(state.range(0)) / 10.0, 0.0, 3,
                       NonlinearityModel::penson_solomon(0.5)};
  for (auto _ : state) {
    const auto series = truncate(spec, AdaptiveTolerance{});
    benchmark::DoNotOptimize(photon_statistics(series, spec).mandel_q);
  }
}
BENCHMARK(BM_MandelQ)->Arg(10)->Arg(50);

void BM_LogWeight(benchmark::State& state) {
  const StateSpec spec{2.0, 0.0, 3, NonlinearityModel::penson_solomon(0.5)};
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_weight(spec, n));
    n = (n + 1) & 1023;
  }
}
BENCHMARK(BM_LogWeight);

}  // namespace
