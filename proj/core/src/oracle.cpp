#include "fockseries/oracle.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "fockseries/error.hpp"

namespace fockseries::oracle {

namespace {

Real factorial(long n, mpfr_prec_t bits) {
  Real out(1L, bits);
  for (long i = 2; i <= n; ++i) out *= Real(i, bits);
  return out;
}

// prod_{j=1}^{m} f(j)^2, multiplied out term by term.
Real deformed_factorial_sq(const NonlinearityModel& model, long m, mpfr_prec_t bits) {
  Real out(1L, bits);
  if (model.kind() == NonlinearityModel::Kind::Identity) return out;
  const Real q(model.q(), bits);
  for (long j = 1; j <= m; ++j) {
    const Real f = pow(q, 1 - j);
    out *= f * f;
  }
  return out;
}

void require_vacuum_free(const StateSpec& spec) {
  if (spec.k == 0 && spec.alpha_abs == 0.0) {
    throw Error(ErrorCode::VacuumUndefined, "Mandel Q is undefined for the vacuum (<n> = 0)");
  }
}

}  // namespace

void PrecisionConfig::validate() const {
  if (mantissa_bits < 128) {
    throw Error(ErrorCode::InvalidParameter, "oracle mantissa_bits must be at least 128");
  }
  if (!(term_floor_rel > 0.0 && term_floor_rel < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "oracle term_floor_rel must lie in (0, 1)");
  }
  if (max_dimension == 0 || max_terms == 0) {
    throw Error(ErrorCode::InvalidParameter, "oracle limits must be positive");
  }
}

PhotonStatistics OracleStatistics::to_double() const {
  PhotonStatistics out;
  out.mean_n = mean_n.to_double();
  out.mean_n2 = mean_n2.to_double();
  out.variance = variance.to_double();
  out.mandel_q = mandel_q.to_double();
  out.tail_bound_rel = 0.0;
  out.converged = true;
  return out;
}

EntanglementResult OracleEntanglement::to_double() const {
  EntanglementResult out;
  out.purity = purity.to_double();
  out.linear_entropy = linear_entropy.to_double();
  out.theta = theta;
  out.converged = true;
  return out;
}

Real oracle_log_weight(const StateSpec& spec, std::int64_t n, const PrecisionConfig& cfg) {
  spec.validate();
  cfg.validate();
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "term index must be nonnegative");
  if (spec.alpha_abs == 0.0 && n > 0) {
    throw Error(ErrorCode::DegenerateAmplitude, "w_n vanishes for n > 0 when |alpha| = 0");
  }
  const mpfr_prec_t bits = cfg.mantissa_bits;
  const long nn = static_cast<long>(n);
  const long total = nn + spec.k;

  Real w = factorial(total, bits) * deformed_factorial_sq(spec.nonlinearity, total, bits);
  const Real n_fact = factorial(nn, bits);
  w /= n_fact * n_fact * deformed_factorial_sq(spec.nonlinearity, nn, bits);
  if (nn > 0) w *= pow(Real(spec.alpha_abs, bits), 2 * nn);
  return log(w);
}

OracleSeries oracle_series(const StateSpec& spec, const PrecisionConfig& cfg) {
  spec.validate();
  cfg.validate();
  const mpfr_prec_t bits = cfg.mantissa_bits;
  const long k = spec.k;

  OracleSeries out{{}, Real(bits), spec.k};
  out.weights.push_back(factorial(k, bits) * deformed_factorial_sq(spec.nonlinearity, k, bits));
  out.total = out.weights.front();
  if (spec.alpha_abs == 0.0) return out;

  const Real alpha(spec.alpha_abs, bits);
  const Real lambda = alpha * alpha / pow(Real(spec.nonlinearity.q(), bits), 2 * k);
  const Real one(1L, bits);
  const Real floor_rel(cfg.term_floor_rel, bits);

  for (long n = 0;; ++n) {
    const Real np1(n + 1, bits);
    const Real ratio = lambda * Real(n + k + 1, bits) / (np1 * np1);
    // Geometric tail after term n, valid once the (decreasing) ratio is < 1.
    if (ratio < one) {
      const Real tail = out.weights.back() * ratio / (one - ratio);
      if (tail < floor_rel * out.total) return out;
    }
    if (out.weights.size() >= cfg.max_terms) {
      throw Error(ErrorCode::HardCapExceeded,
                  "oracle series exceeded " + std::to_string(cfg.max_terms) + " terms");
    }
    out.weights.push_back(out.weights.back() * ratio);
    out.total += out.weights.back();
  }
}

Real oracle_normalization_log(const OracleSeries& series) {
  return -(log(series.total) / Real(2L, series.total.precision()));
}

std::vector<OracleProbability> oracle_distribution(const OracleSeries& series) {
  std::vector<OracleProbability> out;
  out.reserve(series.weights.size());
  for (std::size_t n = 0; n < series.weights.size(); ++n) {
    out.push_back({static_cast<std::int64_t>(n) + series.k, series.weights[n] / series.total});
  }
  return out;
}

OracleStatistics oracle_statistics(const StateSpec& spec, const PrecisionConfig& cfg) {
  require_vacuum_free(spec);
  const auto series = oracle_series(spec, cfg);
  const mpfr_prec_t bits = cfg.mantissa_bits;

  Real first(bits);
  for (std::size_t n = 0; n < series.weights.size(); ++n) {
    first += series.weights[n] * Real(static_cast<long>(n) + spec.k, bits);
  }
  const Real mean = first / series.total;

  Real second(bits);
  for (std::size_t n = 0; n < series.weights.size(); ++n) {
    const Real d = Real(static_cast<long>(n) + spec.k, bits) - mean;
    second += series.weights[n] * d * d;
  }
  const Real variance = second / series.total;

  return OracleStatistics{mean, variance + mean * mean, variance,
                          variance / mean - Real(1L, bits), series.n_max()};
}

OracleEntanglement oracle_entropy(const StateSpec& spec, const BeamSplitterSetting& setting,
                                  const PrecisionConfig& cfg) {
  setting.validate();
  const auto series = oracle_series(spec, cfg);
  const mpfr_prec_t bits = cfg.mantissa_bits;

  const std::size_t k = static_cast<std::size_t>(spec.k);
  const std::size_t max_total = k + series.n_max();
  const std::size_t dim = max_total + 1;
  if (dim > cfg.max_dimension) {
    throw Error(ErrorCode::DimensionTooLarge,
                "oracle entropy dimension " + std::to_string(dim) + " exceeds " +
                    std::to_string(cfg.max_dimension));
  }

  // The doubles nearest pi/2 and pi/4 stand for the exact angles; otherwise
  // the oracle would resolve their ~1e-17 offset from the true angle.
  const bool fully_reflecting = setting.theta == std::numbers::pi / 2;
  const bool balanced = setting.theta == std::numbers::pi / 4;
  const Real theta(setting.theta, bits);
  const Real half_root = sqrt(Real(1L, bits) / Real(2L, bits));
  const Real t = fully_reflecting ? Real(0L, bits) : balanced ? half_root : cos(theta);
  const Real r = fully_reflecting ? Real(1L, bits) : balanced ? half_root : sin(theta);

  std::vector<Real> t_pow(dim, Real(1L, bits));
  std::vector<Real> r_pow(dim, Real(1L, bits));
  for (std::size_t i = 1; i < dim; ++i) {
    t_pow[i] = t_pow[i - 1] * t;
    r_pow[i] = r_pow[i - 1] * r;
  }

  // amps[j * dim + l]
  std::vector<Real> amps(dim * dim, Real(bits));
  for (std::size_t n = 0; n <= series.n_max(); ++n) {
    const std::size_t m = n + k;
    const Real c = sqrt(series.weights[n] / series.total);
    Real binomial(1L, bits);
    for (std::size_t j = 0; j <= m; ++j) {
      if (j > 0) {
        binomial *= Real(static_cast<long>(m - j + 1), bits);
        binomial /= Real(static_cast<long>(j), bits);
      }
      amps[j * dim + (m - j)] = c * sqrt(binomial) * t_pow[j] * r_pow[m - j];
    }
  }

  Real purity(bits);
  Real overlap(bits);
  Real contribution(bits);
  const Real two(2L, bits);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t l_from = j >= k ? 0 : k - j;
    const std::size_t j2_last = std::min(dim - 1, j + series.n_max());
    for (std::size_t j2 = j; j2 <= j2_last; ++j2) {
      mpfr_set_zero(overlap.get(), 1);
      for (std::size_t l = l_from; l + j2 <= max_total; ++l) {
        mpfr_fma(overlap.get(), amps[j * dim + l].get(), amps[j2 * dim + l].get(), overlap.get(),
                 MPFR_RNDN);
      }
      mpfr_sqr(contribution.get(), overlap.get(), MPFR_RNDN);
      if (j2 != j) contribution *= two;
      purity += contribution;
    }
  }

  return OracleEntanglement{purity, Real(1L, bits) - purity, dim, setting.theta};
}

}  // namespace fockseries::oracle
