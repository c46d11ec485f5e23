#pragma once

#include <string>
#include <variant>

#include "cotsum/cyclotomic.hpp"
#include "cotsum/rational.hpp"

namespace cotsum {

// A rational number or a cyclotomic element. Cyclotomic values whose
// non-constant coordinates vanish are always stored as rationals.
class ExactValue {
 public:
  ExactValue() : value_(BigRational(0)) {}
  ExactValue(const BigRational& q) : value_(q) {}  // NOLINT(implicit)
  ExactValue(const CycloElement& u);               // NOLINT(implicit)

  bool is_rational() const { return std::holds_alternative<BigRational>(value_); }
  const BigRational& rational() const;
  /// The value as a field element of at least conductor 1.
  CycloElement cyclotomic() const;
  std::uint64_t conductor() const;

  bool is_zero() const;

  ExactValue& operator+=(const ExactValue& rhs);
  ExactValue& operator-=(const ExactValue& rhs);
  ExactValue& operator*=(const ExactValue& rhs);
  friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
  friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator-(const ExactValue& a);
  friend bool operator==(const ExactValue& a, const ExactValue& b);

  std::string to_string() const;

 private:
  std::variant<BigRational, CycloElement> value_;
};

Complex to_complex(const ExactValue& v, int digits);

}  // namespace cotsum
