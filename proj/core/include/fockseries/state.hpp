#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fockseries {

/*!
 * Deformation function f(n) of a nonlinear coherent state.
 *
 * Only the Penson-Solomon family f(n) = q^(1-n), 0 < q <= 1, is supported;
 * Identity is the q = 1 member and behaves exactly like it. The squared
 * deformed factorial has the closed form
 *
 *   [f^2(m)]! = f(m)^2 f(m-1)^2 ... f(1)^2 = q^(-m(m-1)),
 *
 * which is what every double-precision path uses.
 */
class NonlinearityModel {
 public:
  enum class Kind { PensonSolomon, Identity };

  static NonlinearityModel penson_solomon(double q);
  static NonlinearityModel identity() noexcept { return NonlinearityModel(Kind::Identity, 1.0); }

  // Accepts "penson-solomon" (also the "panson-solomon" spelling) and "identity".
  static NonlinearityModel from_name(std::string_view name, double q);

  Kind kind() const noexcept { return kind_; }
  double q() const noexcept { return q_; }
  std::string name() const;

  // f(n) itself, for reference computations.
  double f(std::int64_t n) const;

  // ln(1/q); zero for Identity.
  double log_inverse_q() const noexcept { return log_inv_q_; }

  // ln [f^2(m)]! = m(m-1) ln(1/q)
  double log_deformed_factorial_sq(std::int64_t m) const noexcept;

  friend bool operator==(const NonlinearityModel&, const NonlinearityModel&) = default;

 private:
  NonlinearityModel(Kind kind, double q);

  Kind kind_;
  double q_;
  double log_inv_q_;
};

/// Parameters of one photon-added nonlinear coherent state |alpha, f, k>.
struct StateSpec {
  double alpha_abs = 0.0;
  double alpha_phase = 0.0;  // radians; no observable depends on it
  int k = 0;                 // number of added photons
  NonlinearityModel nonlinearity = NonlinearityModel::identity();

  // Throws Error(InvalidParameter) for alpha_abs < 0, non-finite values, or k < 0.
  void validate() const;

  // |alpha|^2 q^(-2k): the term ratio is lambda (n+k+1)/(n+1)^2.
  double effective_intensity() const;
};

}  // namespace fockseries
