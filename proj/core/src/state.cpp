#include "fockseries/state.hpp"

#include <cmath>

#include "fockseries/error.hpp"

namespace fockseries {

NonlinearityModel::NonlinearityModel(Kind kind, double q)
    : kind_(kind), q_(q), log_inv_q_(q == 1.0 ? 0.0 : -std::log(q)) {}

NonlinearityModel NonlinearityModel::penson_solomon(double q) {
  // q = 0 makes q^(1-n) diverge for every n >= 2.
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                "Penson-Solomon parameter q must lie in (0, 1], got " + std::to_string(q));
  }
  return NonlinearityModel(Kind::PensonSolomon, q);
}

NonlinearityModel NonlinearityModel::from_name(std::string_view name, double q) {
  if (name == "penson-solomon" || name == "panson-solomon") return penson_solomon(q);
  if (name == "identity") {
    if (q != 1.0) {
      throw Error(ErrorCode::InvalidParameter, "identity nonlinearity requires q = 1");
    }
    return identity();
  }
  throw Error(ErrorCode::InvalidParameter, "unknown nonlinearity '" + std::string(name) + "'");
}

std::string NonlinearityModel::name() const {
  return kind_ == Kind::Identity ? "identity" : "penson-solomon";
}

double NonlinearityModel::f(std::int64_t n) const {
  return kind_ == Kind::Identity ? 1.0 : std::pow(q_, static_cast<double>(1 - n));
}

double NonlinearityModel::log_deformed_factorial_sq(std::int64_t m) const noexcept {
  const auto mm = static_cast<double>(m);
  return mm * (mm - 1.0) * log_inv_q_;
}

void StateSpec::validate() const {
  if (!std::isfinite(alpha_abs) || alpha_abs < 0.0) {
    throw Error(ErrorCode::InvalidParameter,
                "alpha_abs must be finite and nonnegative, got " + std::to_string(alpha_abs));
  }
  if (!std::isfinite(alpha_phase)) {
    throw Error(ErrorCode::InvalidParameter, "alpha_phase must be finite");
  }
  if (k < 0) {
    throw Error(ErrorCode::InvalidParameter, "k must be nonnegative, got " + std::to_string(k));
  }
}

double StateSpec::effective_intensity() const {
  const double lambda = alpha_abs * alpha_abs * std::pow(nonlinearity.q(), -2.0 * k);
  if (!std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidParameter, "|alpha|^2 q^(-2k) overflows double precision");
  }
  return lambda;
}

}  // namespace fockseries
