#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cotsum/rational.hpp"

namespace cotsum {

// Dense integer polynomial, index = degree, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t power, const BigInt& coeff = 1);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t power) const;

  BigInt operator()(const BigInt& x) const;
  BigRational operator()(const BigRational& x) const;

  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend IntPolynomial operator*(const BigInt& scalar, const IntPolynomial& poly);
  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) = default;

  /// Quotient by a monic divisor; throws InvalidArgument if the remainder is nonzero.
  IntPolynomial exact_div_monic(const IntPolynomial& divisor) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace cotsum
