#pragma once

// Arbitrary-precision real and complex values over MPFR. Every value carries
// its own precision; binary operations work at the larger of the operand
// precisions. There is no process-wide precision setting.

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "cotsum/rational.hpp"

namespace cotsum {

/// Binary precision used for a request of `digits` decimal digits plus
/// `guard` extra decimal digits.
mpfr_prec_t bits_for_digits(int digits, int guard = 0);

class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const BigRational& value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t bits);
  /// 10^exponent.
  static Real pow10(long exponent, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator-(Real x);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }

 private:
  void raise_precision(const Real& other);
  mpfr_t value_;
};

Real abs(Real x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
/// Nearest integer, ties away from zero.
Real round(const Real& x);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const BigRational& r, const BigRational& i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
  friend Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }
  friend Complex operator-(Complex x) { return Complex(-std::move(x.re), -std::move(x.im)); }
};

Real abs(const Complex& z);

/// Working-precision settings for numeric evaluation. `digits` is the
/// precision results are compared at; arithmetic runs with `guard_digits`
/// more. Terms whose argument lies closer than `pole_tolerance` to an
/// integer count as singular.
struct PrecisionContext {
  int digits = 60;
  int guard_digits = 10;
  BigRational pole_tolerance = default_pole_tolerance(60);

  static BigRational default_pole_tolerance(int digits);
  /// Validates digits >= 1 and 0 < pole_tolerance < 1/4.
  static PrecisionContext make(int digits);
  static PrecisionContext make(int digits, const BigRational& pole_tolerance);

  mpfr_prec_t working_bits() const { return bits_for_digits(digits, guard_digits); }
  Real tolerance() const { return Real(pole_tolerance, working_bits()); }
  /// 10^{-exponent}, handy for residual thresholds.
  Real epsilon(long exponent) const { return Real::pow10(-exponent, working_bits()); }
};

}  // namespace cotsum
