#pragma once

#include <cstdint>
#include <vector>

#include "fockseries/series.hpp"
#include "fockseries/state.hpp"

namespace fockseries {

struct PhotonProbability {
  std::int64_t photon_number = 0;
  double probability = 0.0;
};

/// Photon-number moments and the Mandel parameter Q = sigma^2 / <n> - 1.
struct PhotonStatistics {
  double mean_n = 0.0;
  double mean_n2 = 0.0;
  double variance = 0.0;
  double mandel_q = 0.0;
  double tail_bound_rel = 0.0;
  bool converged = true;
};

// P(n + k) = w_n / sum_m w_m for n = 0..n_max.
std::vector<PhotonProbability> photon_distribution(const TruncatedSeries& series,
                                                   const StateSpec& spec);

// Mean first, then the centered second moment; mean_n2 is reported as
// variance + mean^2. Throws VacuumUndefined when <n> = 0.
PhotonStatistics photon_statistics(const TruncatedSeries& series, const StateSpec& spec);

}  // namespace fockseries
