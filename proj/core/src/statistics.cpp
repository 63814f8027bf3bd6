#include "fockseries/statistics.hpp"

#include <cmath>

#include "fockseries/error.hpp"

namespace fockseries {

namespace {

void require_series(const TruncatedSeries& series) {
  if (series.empty()) throw Error(ErrorCode::InvalidParameter, "empty series");
}

}  // namespace

std::vector<PhotonProbability> photon_distribution(const TruncatedSeries& series,
                                                   const StateSpec& spec) {
  require_series(series);
  spec.validate();
  const auto p = normalized_weights(series);
  std::vector<PhotonProbability> out;
  out.reserve(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) {
    out.push_back({static_cast<std::int64_t>(n) + spec.k, p[n]});
  }
  return out;
}

PhotonStatistics photon_statistics(const TruncatedSeries& series, const StateSpec& spec) {
  require_series(series);
  spec.validate();

  const auto p = normalized_weights(series);
  // The probabilities sum to 1 only up to rounding; divide it out.
  double mass = 0.0;
  double first = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    mass += p[n];
    first += p[n] * static_cast<double>(n + spec.k);
  }
  const double mean = first / mass;
  if (mean == 0.0) {
    throw Error(ErrorCode::VacuumUndefined, "Mandel Q is undefined for the vacuum (<n> = 0)");
  }

  double second = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double d = static_cast<double>(n + spec.k) - mean;
    second += p[n] * d * d;
  }
  const double variance = second / mass;

  PhotonStatistics out;
  out.mean_n = mean;
  out.variance = variance;
  out.mean_n2 = variance + mean * mean;
  out.mandel_q = variance / mean - 1.0;
  out.tail_bound_rel = series.tail_bound_rel;
  out.converged = series.converged;
  return out;
}

}  // namespace fockseries
