#include "cotsum/exact_value.hpp"

#include "cotsum/error.hpp"

namespace cotsum {

ExactValue::ExactValue(const CycloElement& u) {
  if (u.is_rational())
    value_ = u.to_rational();
  else
    value_ = u;
}

const BigRational& ExactValue::rational() const {
  require(is_rational(), ErrorKind::NotRational, "value is not rational");
  return std::get<BigRational>(value_);
}

CycloElement ExactValue::cyclotomic() const {
  if (is_rational()) return CycloElement(1, std::get<BigRational>(value_));
  return std::get<CycloElement>(value_);
}

std::uint64_t ExactValue::conductor() const {
  return is_rational() ? 1 : std::get<CycloElement>(value_).conductor();
}

bool ExactValue::is_zero() const { return is_rational() && std::get<BigRational>(value_) == 0; }

ExactValue& ExactValue::operator+=(const ExactValue& rhs) {
  if (is_rational() && rhs.is_rational())
    value_ = std::get<BigRational>(value_) + std::get<BigRational>(rhs.value_);
  else
    *this = ExactValue(cyclotomic() + rhs.cyclotomic());
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& rhs) { return *this += -rhs; }

ExactValue& ExactValue::operator*=(const ExactValue& rhs) {
  if (is_rational() && rhs.is_rational())
    value_ = std::get<BigRational>(value_) * std::get<BigRational>(rhs.value_);
  else if (rhs.is_rational())
    *this = ExactValue(std::get<CycloElement>(value_) * std::get<BigRational>(rhs.value_));
  else if (is_rational())
    *this = ExactValue(std::get<CycloElement>(rhs.value_) * std::get<BigRational>(value_));
  else
    *this = ExactValue(std::get<CycloElement>(value_) * std::get<CycloElement>(rhs.value_));
  return *this;
}

ExactValue operator-(const ExactValue& a) {
  if (a.is_rational()) return ExactValue(BigRational(-std::get<BigRational>(a.value_)));
  return ExactValue(-std::get<CycloElement>(a.value_));
}

bool operator==(const ExactValue& a, const ExactValue& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return std::get<BigRational>(a.value_) == std::get<BigRational>(b.value_);
  return std::get<CycloElement>(a.value_) == std::get<CycloElement>(b.value_);
}

std::string ExactValue::to_string() const {
  if (is_rational()) return cotsum::to_string(std::get<BigRational>(value_));
  const auto& u = std::get<CycloElement>(value_);
  std::string out;
  const auto coeffs = u.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    std::string c = cotsum::to_string(coeffs[j]);
    if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    if (c[0] == '-') c.erase(0, 1);
    out += c;
    if (j > 0) out += "*z" + std::to_string(u.conductor()) + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out;
}

Complex to_complex(const ExactValue& v, int digits) {
  if (v.is_rational()) {
    const mpfr_prec_t bits = bits_for_digits(digits, 10);
    return Complex(v.rational(), BigRational(0), bits);
  }
  return to_complex(v.cyclotomic(), digits);
}

}  // namespace cotsum
