#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fockseries/entangle.hpp"
#include "fockseries/oracle_real.hpp"
#include "fockseries/state.hpp"
#include "fockseries/statistics.hpp"

/*!
 * Extended-precision reference path.
 *
 * Shares no numerics with the double pipeline: weights come from the exact
 * multiplicative recurrence w_{n+1} = w_n |alpha|^2 q^(-2k) (n+k+1)/(n+1)^2
 * started at w_0 = k! prod_{j<=k} f(j)^2, sums are plain MPFR additions, and
 * no log-gamma or log-sum-exp is involved anywhere.
 */
namespace fockseries::oracle {

struct PrecisionConfig {
  long mantissa_bits = 256;
  // Stop once a term is below this fraction of the running sum while the
  // term ratio is below 1.
  double term_floor_rel = 1e-40;
  // Largest per-arm dimension the O(D^3) entropy kernel accepts.
  std::size_t max_dimension = 1024;
  std::size_t max_terms = 10'000'000;

  void validate() const;
};

struct OracleSeries {
  std::vector<Real> weights;  // w_n, n = 0..n_max
  Real total;                 // sum of weights
  int k = 0;

  std::size_t n_max() const noexcept { return weights.size() - 1; }
};

struct OracleStatistics {
  Real mean_n;
  Real mean_n2;
  Real variance;
  Real mandel_q;
  std::size_t n_max = 0;

  PhotonStatistics to_double() const;
};

struct OracleEntanglement {
  Real purity;
  Real linear_entropy;
  std::size_t dimension = 0;
  double theta = 0.0;

  EntanglementResult to_double() const;
};

struct OracleProbability {
  std::int64_t photon_number;
  Real probability;
};

// ln w_n straight from the defining products (no recurrence, no closed form).
Real oracle_log_weight(const StateSpec& spec, std::int64_t n, const PrecisionConfig& cfg = {});

OracleSeries oracle_series(const StateSpec& spec, const PrecisionConfig& cfg = {});

Real oracle_normalization_log(const OracleSeries& series);

std::vector<OracleProbability> oracle_distribution(const OracleSeries& series);

OracleStatistics oracle_statistics(const StateSpec& spec, const PrecisionConfig& cfg = {});

// Throws DimensionTooLarge when k + n_max + 1 exceeds cfg.max_dimension.
OracleEntanglement oracle_entropy(const StateSpec& spec, const BeamSplitterSetting& setting,
                                  const PrecisionConfig& cfg = {});

}  // namespace fockseries::oracle
