#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace fockseries::oracle {

/// Owning MPFR value with an explicit mantissa width. Binary operations round
/// to nearest at the wider of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 40) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator-(const Real& x);

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real log(const Real& x);
  friend Real cos(const Real& x);
  friend Real sin(const Real& x);
  friend Real pow(const Real& x, long exponent);

 private:
  mpfr_t value_;
};

}  // namespace fockseries::oracle
