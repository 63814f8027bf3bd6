#include "fockseries/entangle.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "fockseries/error.hpp"

namespace fockseries {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double mag2(double x) { return x * x; }
double mag2(const std::complex<double>& z) { return std::norm(z); }
double conj_of(double x) { return x; }
std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }

std::vector<double> log_factorials(std::size_t up_to) {
  std::vector<double> table(up_to + 1);
  for (std::size_t m = 0; m <= up_to; ++m) {
    table[m] = boost::math::lgamma(static_cast<double>(m) + 1.0);
  }
  return table;
}

// A(j, l) = c_{j+l} sqrt(C(j+l, j)) t^j r^l, built in log space.
template <class T, class PhaseFn>
BasicJointAmplitudes<T> expand(const TruncatedSeries& series, const StateSpec& spec,
                               const BeamSplitterSetting& setting, SplitOptions options,
                               PhaseFn phase) {
  spec.validate();
  setting.validate();
  if (series.empty()) throw Error(ErrorCode::InvalidParameter, "empty series");
  if (!series.converged && !options.allow_unconverged) {
    throw Error(ErrorCode::Unconverged,
                "series is not certified; pass allow_unconverged to propagate it anyway");
  }

  const auto k = static_cast<std::size_t>(spec.k);
  const std::size_t max_total = k + series.n_max();
  BasicJointAmplitudes<T> amps(k, max_total, series.tail_bound_rel, series.converged);

  const double t = setting.transmittance();
  const double log_t = t > 0.0 ? std::log(t) : 0.0;
  const double log_r = std::log(setting.reflectance());
  const auto log_fact = log_factorials(max_total);
  const auto p = normalized_weights(series);

  for (std::size_t n = 0; n <= series.n_max(); ++n) {
    const std::size_t m = n + k;
    if (p[n] == 0.0) continue;
    const double log_c = 0.5 * std::log(p[n]);
    // With t = 0 only the fully reflected entry j = 0 survives.
    const std::size_t j_max = t > 0.0 ? m : 0;
    for (std::size_t j = 0; j <= j_max; ++j) {
      const std::size_t l = m - j;
      const double log_amp = log_c + 0.5 * (log_fact[m] - log_fact[j] - log_fact[l]) +
                             static_cast<double>(j) * log_t + static_cast<double>(l) * log_r;
      amps.at(j, l) = phase(l) * std::exp(log_amp);
    }
  }
  return amps;
}

template <class T>
double norm_of(const BasicJointAmplitudes<T>& amps) {
  double sum = 0.0;
  for (std::size_t j = 0; j < amps.dimension(); ++j) {
    for (const auto& a : amps.row(j)) sum += mag2(a);
  }
  return sum;
}

// Tr rho^2 where rho(i, i') = sum_x M(i, x) conj(M(i', x)) for a square
// row-major matrix M whose row i is nonzero only on [lo(i), hi(i)].
template <class T>
double gram_purity(const std::vector<T>& m, std::size_t dim, std::size_t min_total,
                   std::size_t max_total) {
  const auto lo = [&](std::size_t i) { return i >= min_total ? std::size_t{0} : min_total - i; };
  const auto hi = [&](std::size_t i) { return max_total - i; };

  double purity = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const T* row_i = m.data() + i * dim;
    double row_sum = 0.0;
    // Rows further apart than the band width share no column.
    const std::size_t last = std::min(dim - 1, i + (max_total - min_total));
    for (std::size_t i2 = i; i2 <= last; ++i2) {
      const T* row_i2 = m.data() + i2 * dim;
      const std::size_t from = std::max(lo(i), lo(i2));
      const std::size_t to = std::min(hi(i), hi(i2));
      T overlap{};
      for (std::size_t x = from; x <= to; ++x) overlap += row_i[x] * conj_of(row_i2[x]);
      row_sum += (i2 == i ? 1.0 : 2.0) * mag2(overlap);
    }
    purity += row_sum;
  }
  return purity;
}

template <class T>
double purity_of(const BasicJointAmplitudes<T>& amps, Arm kept) {
  const double norm = norm_of(amps);
  const double allowed = std::max(10.0 * amps.source_tail_bound(), 1e-12);
  if (!(std::abs(norm - 1.0) <= allowed)) {
    throw Error(ErrorCode::UnnormalizedInput,
                "joint amplitudes have norm " + std::to_string(norm) + ", expected 1");
  }

  const std::size_t dim = amps.dimension();
  std::vector<T> m(dim * dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t l = 0; l < dim; ++l) {
      if (kept == Arm::Transmitted) {
        m[j * dim + l] = amps(j, l);
      } else {
        m[l * dim + j] = amps(j, l);
      }
    }
  }
  return gram_purity(m, dim, amps.min_total(), amps.max_total());
}

}  // namespace

void BeamSplitterSetting::validate() const {
  if (!(theta > 0.0 && theta <= kHalfPi)) {
    throw Error(ErrorCode::InvalidTheta,
                "beam splitter angle must lie in (0, pi/2], got " + std::to_string(theta));
  }
}

double BeamSplitterSetting::transmittance() const {
  return theta == kHalfPi ? 0.0 : std::cos(theta);
}

double BeamSplitterSetting::reflectance() const {
  return theta == kHalfPi ? 1.0 : std::sin(theta);
}

JointAmplitudes split(const TruncatedSeries& series, const StateSpec& spec,
                      const BeamSplitterSetting& setting, SplitOptions options) {
  return expand<double>(series, spec, setting, options, [](std::size_t) { return 1.0; });
}

ComplexJointAmplitudes split_with_phase(const TruncatedSeries& series, const StateSpec& spec,
                                        const BeamSplitterSetting& setting,
                                        ReflectionPhase phase, SplitOptions options) {
  using C = std::complex<double>;
  return expand<C>(series, spec, setting, options, [phase](std::size_t l) {
    if (phase == ReflectionPhase::Real) return C{1.0, 0.0};
    static constexpr C kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowersOfI[l % 4];
  });
}

double total_norm(const JointAmplitudes& amps) { return norm_of(amps); }
double total_norm(const ComplexJointAmplitudes& amps) { return norm_of(amps); }

double reduced_purity(const JointAmplitudes& amps, Arm kept) { return purity_of(amps, kept); }
double reduced_purity(const ComplexJointAmplitudes& amps, Arm kept) {
  return purity_of(amps, kept);
}

EntanglementResult linear_entropy(const TruncatedSeries& series, const StateSpec& spec,
                                  const BeamSplitterSetting& setting, SplitOptions options) {
  const auto amps = split(series, spec, setting, options);
  EntanglementResult out;
  // Rounding can push Tr rho^2 a few ulps above 1 for product outputs.
  out.purity = std::min(reduced_purity(amps), 1.0);
  out.linear_entropy = 1.0 - out.purity;
  out.theta = setting.theta;
  out.converged = series.converged;
  return out;
}

}  // namespace fockseries
