#pragma once

// Exact rational scaffolding: big integers/rationals, Bernoulli numbers,
// polynomials and functions, the sawtooth, divisor sums, the Moebius
// function and gcd/Bezout helpers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cotsum {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
inline BigRational make_rational(long num, long den = 1) { return make_rational(BigInt(num), BigInt(den)); }

BigInt floor(const BigRational& x);
BigRational fractional_part(const BigRational& x);
bool is_integer(const BigRational& x);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

/// Accepts "p/q" and integer literals (optional sign). Throws InvalidArgument.
BigRational parse_rational(std::string_view text);

/// Accepts "p/q", integers and finite decimal literals such as "-0.25" or
/// "1.5e-3"; the value is kept exactly.
BigRational parse_decimal_or_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigRational pow(const BigRational& base, long exponent);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Dense polynomial with rational coefficients, index = degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coefficient(std::size_t power) const;
  BigRational operator()(const BigRational& x) const;

  friend RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
  friend RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(const BigRational& scalar, const RationalPolynomial& poly);
  friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) = default;

  /// Euclidean division; throws DivisionByZero when divisor is zero.
  static void divmod(const RationalPolynomial& num, const RationalPolynomial& den, RationalPolynomial& quot,
                     RationalPolynomial& rem);

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// B_k = B_k(0) from the generating function z e^{xz}/(e^z - 1); B_1 = -1/2.
/// Memoized; safe to call concurrently.
BigRational bernoulli_number(unsigned k);

/// B_k(x) = sum_j C(k,j) B_j x^{k-j}.
RationalPolynomial bernoulli_polynomial(unsigned k);

/// B_k({x}); for k = 1 this is the sawtooth, zero at the integers.
BigRational bernoulli_function(unsigned k, const BigRational& x);

/// ((x)) = {x} - 1/2 off the integers, 0 on them.
BigRational sawtooth(const BigRational& x);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// sum_{d | n} d^m; m may be negative.
BigRational divisor_sigma(long m, std::uint64_t n);

int moebius(std::uint64_t n);

/// Inverse of a modulo b in [1, b]; b = 1 yields 1. Throws NotCoprime.
BigInt mod_inverse(const BigInt& a, const BigInt& b);

struct BezoutTriple {
  BigInt A, B, C;
};

/// A*b*c + B*c*a + C*a*b = 1 for pairwise coprime positive a, b, c.
BezoutTriple three_term_bezout(const BigInt& a, const BigInt& b, const BigInt& c);

}  // namespace cotsum
