#include "fockseries/oracle_real.hpp"

#include <algorithm>
#include <memory>

namespace fockseries::oracle {

namespace {

// Widen in place so the result of a binary operation keeps the wider mantissa.
void widen(Real& target, mpfr_prec_t bits) {
  if (target.precision() < bits) mpfr_prec_round(target.get(), bits, MPFR_RNDN);
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs and leave `other` holding a fresh minimal value.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(raw);
}

Real& Real::operator+=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(*this, rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& x) {
  Real out(x.precision());
  mpfr_neg(out.get(), x.get(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long exponent) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, MPFR_RNDN);
  return out;
}

}  // namespace fockseries::oracle
