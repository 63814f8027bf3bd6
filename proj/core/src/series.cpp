#include "fockseries/series.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "fockseries/error.hpp"

namespace fockseries {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_factorial(std::int64_t n) {
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

void require_nonnegative(std::int64_t n) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidParameter, "term index must be nonnegative, got " +
                                                 std::to_string(n));
  }
}

// Relative size of the geometric tail bound w_{n+1} / (1 - r) against the
// retained sum, or +inf while the ratio is still >= 1. Valid because the
// ratio lambda (n+k+1)/(n+1)^2 decreases monotonically in n.
double tail_certificate(const StateSpec& spec, std::int64_t n, double log_w_n, double log_total) {
  const double r = weight_ratio(spec, n);
  if (!(r < 1.0)) return kInf;
  return std::exp(log_w_n + std::log(r) - std::log1p(-r) - log_total);
}

// Same bound for the second moment sum_m (m+k)^2 w_m against its retained
// part. Consecutive moment terms shrink by r_m ((m+k+1)/(m+k))^2, which is
// also decreasing, so its value at m = n+1 bounds the rest.
double moment_certificate(const StateSpec& spec, std::int64_t n, double log_w_n,
                          double log_moment) {
  const double r = weight_ratio(spec, n);
  const auto next = static_cast<double>(n + 1 + spec.k);
  const double growth = (next + 1.0) / next;
  const double rho = r * growth * growth;
  if (!(rho < 1.0)) return kInf;
  return std::exp(log_w_n + std::log(r) + 2.0 * std::log(next) - std::log1p(-rho) - log_moment);
}

TruncatedSeries single_term(const StateSpec& spec) {
  TruncatedSeries out;
  out.log_weights.push_back(log_weight(spec, 0));
  out.log_total = out.log_weights.front();
  out.tail_bound_rel = 0.0;
  out.converged = true;
  return out;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::InvalidParameter,
                "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

void LogSumExp::add(double log_term) noexcept {
  if (log_term == -kInf) return;
  if (log_term > pivot_) {
    scaled_ = scaled_ * std::exp(pivot_ - log_term) + 1.0;
    pivot_ = log_term;
  } else {
    scaled_ += std::exp(log_term - pivot_);
  }
}

double LogSumExp::value() const noexcept {
  return scaled_ == 0.0 ? -kInf : pivot_ + std::log(scaled_);
}

double log_weight(const StateSpec& spec, std::int64_t n) {
  spec.validate();
  require_nonnegative(n);
  if (spec.alpha_abs == 0.0 && n > 0) {
    throw Error(ErrorCode::DegenerateAmplitude,
                "w_n vanishes for n > 0 when |alpha| = 0 (n = " + std::to_string(n) + ")");
  }
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(spec.k);
  const double power = n == 0 ? 0.0 : 2.0 * nd * std::log(spec.alpha_abs);
  // [f^2(n+k)]! / [f^2(n)]! = q^-((n+k)(n+k-1) - n(n-1)) = q^-(k(k-1) + 2nk)
  const double deformation = (kd * (kd - 1.0) + 2.0 * nd * kd) * spec.nonlinearity.log_inverse_q();
  return power + log_factorial(n + spec.k) - 2.0 * log_factorial(n) + deformation;
}

double weight_ratio(const StateSpec& spec, std::int64_t n) {
  spec.validate();
  require_nonnegative(n);
  const auto np1 = static_cast<double>(n + 1);
  return spec.effective_intensity() * static_cast<double>(n + spec.k + 1) / (np1 * np1);
}

TruncatedSeries truncate(const StateSpec& spec, const TruncationPolicy& policy) {
  spec.validate();
  validate(policy);
  if (spec.alpha_abs == 0.0) return single_term(spec);

  TruncatedSeries out;
  LogSumExp total;

  if (const auto* fixed = std::get_if<FixedCutoff>(&policy)) {
    const auto last = static_cast<std::int64_t>(fixed->n_max);
    out.log_weights.reserve(fixed->n_max + 1);
    for (std::int64_t n = 0; n <= last; ++n) {
      out.log_weights.push_back(log_weight(spec, n));
      total.add(out.log_weights.back());
    }
    out.log_total = total.value();
    const double bound = tail_certificate(spec, last, out.log_weights.back(), out.log_total);
    out.converged = bound <= kDefaultRelTol;
    out.tail_bound_rel = out.converged ? bound : kInf;
    return out;
  }

  // Stopping also waits for the second-moment tail, so that <n^2> (and hence
  // Q) is as well resolved as the mass.
  const auto& adaptive = std::get<AdaptiveTolerance>(policy);
  LogSumExp moment;
  for (std::int64_t n = 0;; ++n) {
    const double lw = log_weight(spec, n);
    out.log_weights.push_back(lw);
    total.add(lw);
    if (n + spec.k > 0) moment.add(lw + 2.0 * std::log(static_cast<double>(n + spec.k)));
    const double bound = tail_certificate(spec, n, lw, total.value());
    if (bound <= adaptive.rel_tol &&
        moment_certificate(spec, n, lw, moment.value()) <= adaptive.rel_tol) {
      out.log_total = total.value();
      out.tail_bound_rel = bound;
      out.converged = true;
      return out;
    }
    if (out.log_weights.size() >= adaptive.hard_cap) {
      throw Error(ErrorCode::HardCapExceeded,
                  "series not certified within " + std::to_string(adaptive.hard_cap) +
                      " terms (|alpha|^2 q^(-2k) = " + shortest(spec.effective_intensity()) + ")");
    }
  }
}

std::vector<double> normalized_weights(const TruncatedSeries& series) {
  if (series.empty()) throw Error(ErrorCode::InvalidParameter, "empty series");
  const double pivot = *std::max_element(series.log_weights.begin(), series.log_weights.end());
  std::vector<double> p(series.log_weights.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    p[n] = std::exp(series.log_weights[n] - pivot);
    sum += p[n];
  }
  for (auto& x : p) x /= sum;
  return p;
}

double normalization_log(const TruncatedSeries& series) {
  if (series.empty()) throw Error(ErrorCode::InvalidParameter, "empty series");
  return -0.5 * series.log_total;
}

void validate(const TruncationPolicy& policy) {
  if (const auto* adaptive = std::get_if<AdaptiveTolerance>(&policy)) {
    if (!(adaptive->rel_tol > 0.0 && adaptive->rel_tol < 1.0)) {
      throw Error(ErrorCode::InvalidParameter, "adaptive rel_tol must lie in (0, 1)");
    }
    if (adaptive->hard_cap == 0) {
      throw Error(ErrorCode::InvalidParameter, "adaptive hard_cap must be positive");
    }
  }
}

TruncationPolicy parse_policy(const std::string& text) {
  const std::string_view view(text);
  const auto colon = view.find(':');
  const auto head = view.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : view.substr(colon + 1);

  TruncationPolicy policy;
  if (head == "fixed") {
    if (rest.empty()) throw Error(ErrorCode::InvalidParameter, "fixed policy needs fixed:<n_max>");
    policy = FixedCutoff{parse_number<std::size_t>(rest, "n_max")};
  } else if (head == "adaptive") {
    AdaptiveTolerance adaptive;
    if (!rest.empty()) {
      const auto second = rest.find(':');
      adaptive.rel_tol = parse_number<double>(rest.substr(0, second), "rel_tol");
      if (second != std::string_view::npos) {
        adaptive.hard_cap = parse_number<std::size_t>(rest.substr(second + 1), "hard_cap");
      }
    }
    policy = adaptive;
  } else {
    throw Error(ErrorCode::InvalidParameter,
                "policy must be adaptive:<tol> or fixed:<n>, got '" + text + "'");
  }
  validate(policy);
  return policy;
}

std::string format_policy(const TruncationPolicy& policy) {
  if (const auto* fixed = std::get_if<FixedCutoff>(&policy)) {
    return "fixed:" + std::to_string(fixed->n_max);
  }
  const auto& adaptive = std::get<AdaptiveTolerance>(policy);
  std::string out = "adaptive:" + shortest(adaptive.rel_tol);
  if (adaptive.hard_cap != kDefaultHardCap) out += ":" + std::to_string(adaptive.hard_cap);
  return out;
}

}  // namespace fockseries
