#include "cotsum/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "cotsum/error.hpp"

namespace cotsum {

mpfr_prec_t bits_for_digits(int digits, int guard) {
  return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long exponent, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.value_, 10, static_cast<unsigned long>(std::labs(exponent)), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(r.value_, 1, r.value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void Real::raise_precision(const Real& other) {
  if (other.precision() > precision()) mpfr_prec_round(value_, other.precision(), MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  raise_precision(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  raise_precision(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  raise_precision(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  require(!rhs.is_zero(), ErrorKind::DivisionByZero, "real division by zero");
  raise_precision(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator-(Real x) {
  mpfr_neg(x.value_, x.value_, MPFR_RNDN);
  return x;
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real apply(const Real& x) {
  Real r(x.precision());
  F(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}
Real sqrt(const Real& x) { return apply<mpfr_sqrt>(x); }
Real sin(const Real& x) { return apply<mpfr_sin>(x); }
Real cos(const Real& x) { return apply<mpfr_cos>(x); }
Real sinh(const Real& x) { return apply<mpfr_sinh>(x); }
Real cosh(const Real& x) { return apply<mpfr_cosh>(x); }

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  Real i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  Real den = rhs.re * rhs.re + rhs.im * rhs.im;
  require(!den.is_zero(), ErrorKind::DivisionByZero, "complex division by zero");
  Real r = (re * rhs.re + im * rhs.im) / den;
  Real i = (im * rhs.re - re * rhs.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigRational PrecisionContext::default_pole_tolerance(int digits) {
  return pow(BigRational(10), -static_cast<long>(std::max(1, digits / 2)));
}

PrecisionContext PrecisionContext::make(int digits) { return make(digits, default_pole_tolerance(digits)); }

PrecisionContext PrecisionContext::make(int digits, const BigRational& pole_tolerance) {
  require(digits >= 1, ErrorKind::InvalidArgument, "digits must be positive");
  require(pole_tolerance > 0 && pole_tolerance < BigRational(1, 4), ErrorKind::InvalidArgument,
          "pole tolerance must lie in (0, 1/4)");
  PrecisionContext ctx;
  ctx.digits = digits;
  ctx.pole_tolerance = pole_tolerance;
  return ctx;
}

}  // namespace cotsum
