#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "fockseries/state.hpp"

namespace fockseries {

inline constexpr double kDefaultRelTol = 1e-14;
inline constexpr std::size_t kDefaultHardCap = 2'000'000;

/// Keep exactly n_max + 1 terms, whatever the tail looks like.
struct FixedCutoff {
  std::size_t n_max = 0;
};

/// Keep adding terms until the geometric tail certificates of both the mass
/// and the second moment sum_n (n+k)^2 w_n drop below rel_tol.
struct AdaptiveTolerance {
  double rel_tol = kDefaultRelTol;
  std::size_t hard_cap = kDefaultHardCap;
};

using TruncationPolicy = std::variant<FixedCutoff, AdaptiveTolerance>;

// "fixed:<n>" or "adaptive:<tol>" (optionally "adaptive:<tol>:<hard_cap>").
TruncationPolicy parse_policy(const std::string& text);
std::string format_policy(const TruncationPolicy& policy);
void validate(const TruncationPolicy& policy);

/*!
 * Retained part of the Fock series sum_n w_n with
 *
 *   w_n = |alpha|^(2n) [f^2(n+k)]! (n+k)! / ((n!)^2 [f^2(n)]!),
 *
 * stored as natural-log weights for n = 0..n_max. Term n populates the
 * photon number n + k.
 *
 * tail_bound_rel bounds the neglected mass sum_{n > n_max} w_n relative to
 * the retained sum. It is +inf whenever the series is not converged.
 */
struct TruncatedSeries {
  std::vector<double> log_weights;
  double log_total = 0.0;  // ln sum of retained weights
  double tail_bound_rel = 0.0;
  bool converged = true;

  std::size_t n_max() const noexcept { return log_weights.empty() ? 0 : log_weights.size() - 1; }
  bool empty() const noexcept { return log_weights.empty(); }
};

/// Streaming log(sum exp(x_i)) pivoted at the running maximum.
class LogSumExp {
 public:
  void add(double log_term) noexcept;

  // -inf when nothing (or only -inf) was added.
  double value() const noexcept;

 private:
  double pivot_ = -std::numeric_limits<double>::infinity();
  double scaled_ = 0.0;
};

// ln w_n from log-gamma and the closed-form deformed factorial.
double log_weight(const StateSpec& spec, std::int64_t n);

// w_{n+1} / w_n = |alpha|^2 q^(-2k) (n+k+1) / (n+1)^2, evaluated directly.
double weight_ratio(const StateSpec& spec, std::int64_t n);

TruncatedSeries truncate(const StateSpec& spec, const TruncationPolicy& policy);

// w_n / sum_m w_m for every stored term. Scaled around the largest term, so
// the result does not pick up the rounding of a large log_total.
std::vector<double> normalized_weights(const TruncatedSeries& series);

// ln N = -1/2 ln sum_n w_n
double normalization_log(const TruncatedSeries& series);

}  // namespace fockseries
