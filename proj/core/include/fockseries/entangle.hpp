#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "fockseries/series.hpp"
#include "fockseries/state.hpp"

namespace fockseries {

/// Lossless two-mode splitter with amplitude transmittance cos(theta) and
/// reflectance sin(theta). theta = pi/2 is treated as exactly t = 0.
struct BeamSplitterSetting {
  double theta = std::numbers::pi / 4;

  // Throws InvalidTheta unless 0 < theta <= pi/2.
  void validate() const;
  double transmittance() const;
  double reflectance() const;
};

/*!
 * Output amplitudes A(j, l) of (state (x) vacuum) after the splitter: j
 * photons in the transmitted arm, l in the reflected arm. Only entries with
 * min_total <= j + l <= max_total can be nonzero.
 *
 * Stored densely, row-major in j, with dimension D = max_total + 1 per arm.
 */
template <class T>
class BasicJointAmplitudes {
 public:
  using value_type = T;

  BasicJointAmplitudes() = default;
  BasicJointAmplitudes(std::size_t min_total, std::size_t max_total, double source_tail_bound,
                       bool converged)
      : min_total_(min_total),
        max_total_(max_total),
        dim_(max_total + 1),
        data_(dim_ * dim_, T{}),
        source_tail_bound_(source_tail_bound),
        converged_(converged) {}

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t min_total() const noexcept { return min_total_; }
  std::size_t max_total() const noexcept { return max_total_; }
  double source_tail_bound() const noexcept { return source_tail_bound_; }
  bool converged() const noexcept { return converged_; }

  T operator()(std::size_t j, std::size_t l) const noexcept {
    return j < dim_ && l < dim_ ? data_[j * dim_ + l] : T{};
  }
  T& at(std::size_t j, std::size_t l) { return data_.at(j * dim_ + l); }

  std::span<const T> row(std::size_t j) const { return {data_.data() + j * dim_, dim_}; }

 private:
  std::size_t min_total_ = 0;
  std::size_t max_total_ = 0;
  std::size_t dim_ = 0;
  std::vector<T> data_;
  double source_tail_bound_ = 0.0;
  bool converged_ = true;
};

using JointAmplitudes = BasicJointAmplitudes<double>;
using ComplexJointAmplitudes = BasicJointAmplitudes<std::complex<double>>;

/// Which output arm is kept when tracing out the other.
enum class Arm { Transmitted, Reflected };

/// Phase attached to the reflected arm: none (real convention) or i^l.
enum class ReflectionPhase { Real, Imaginary };

struct SplitOptions {
  // Accept a series whose converged flag is false; the flag is carried on.
  bool allow_unconverged = false;
};

JointAmplitudes split(const TruncatedSeries& series, const StateSpec& spec,
                      const BeamSplitterSetting& setting, SplitOptions options = {});

// Same expansion with a unit-modulus phase i^l on the reflected arm. Used to
// check that nothing observable depends on the splitter phase convention.
ComplexJointAmplitudes split_with_phase(const TruncatedSeries& series, const StateSpec& spec,
                                        const BeamSplitterSetting& setting,
                                        ReflectionPhase phase, SplitOptions options = {});

// sum_ij A(j,l)^2 (or |A|^2).
double total_norm(const JointAmplitudes& amps);
double total_norm(const ComplexJointAmplitudes& amps);

// Tr rho^2 of the kept arm. Throws UnnormalizedInput when the norm is off by
// more than max(10 * source_tail_bound, 1e-12).
double reduced_purity(const JointAmplitudes& amps, Arm kept = Arm::Transmitted);
double reduced_purity(const ComplexJointAmplitudes& amps, Arm kept = Arm::Transmitted);

struct EntanglementResult {
  double purity = 1.0;
  double linear_entropy = 0.0;
  double theta = std::numbers::pi / 4;
  bool converged = true;
};

EntanglementResult linear_entropy(const TruncatedSeries& series, const StateSpec& spec,
                                  const BeamSplitterSetting& setting, SplitOptions options = {});

}  // namespace fockseries
