#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_n).
//
// An element of conductor n is stored in the power basis 1, z, ..., z^{phi(n)-1}
// of Q[x]/(Phi_n) as integer numerators over one positive common denominator.
// Elements are reduced on construction and after every operation. Binary
// operations on elements of different conductors first lift both operands to
// the lcm of the conductors.

#include <cstdint>
#include <vector>

#include "cotsum/bigfloat.hpp"
#include "cotsum/int_poly.hpp"
#include "cotsum/rational.hpp"

namespace cotsum {

inline constexpr std::uint64_t kDefaultConductorCap = 5000;

/// The n-th cyclotomic polynomial, degree phi(n). Cached.
IntPolynomial cyclotomic_polynomial(std::uint64_t n);

class CycloElement {
 public:
  /// Zero of Q(zeta_n).
  explicit CycloElement(std::uint64_t conductor = 1);
  CycloElement(std::uint64_t conductor, const BigRational& value);

  /// Coordinates in the power basis; longer inputs are reduced mod Phi_n.
  static CycloElement from_coefficients(std::uint64_t conductor, const std::vector<BigRational>& coeffs);
  /// (1/den) * sum_e coeffs[e] * zeta_n^e with e read modulo n.
  static CycloElement from_exponents(std::uint64_t conductor, std::vector<BigInt> coeffs, const BigInt& den);

  std::uint64_t conductor() const { return conductor_; }
  std::size_t degree() const { return num_.size(); }

  BigRational coefficient(std::size_t j) const;
  std::vector<BigRational> coefficients() const;
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational when a non-constant coordinate is nonzero.
  BigRational to_rational() const;

  /// Same value in Q(zeta_m); m must be a multiple of the conductor.
  CycloElement lift(std::uint64_t m) const;
  /// Absolute trace Tr_{Q(zeta_n)/Q}.
  BigRational trace() const;
  /// The automorphism zeta -> zeta^u, gcd(u, n) = 1.
  CycloElement galois(std::int64_t u) const;
  CycloElement conjugate() const { return galois(-1); }
  /// Throws DivisionByZero for zero.
  CycloElement inverse() const;

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const CycloElement& rhs);
  CycloElement& operator*=(const BigRational& rhs);

  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) { return lhs += rhs; }
  friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs) { return lhs -= rhs; }
  friend CycloElement operator*(CycloElement lhs, const CycloElement& rhs) { return lhs *= rhs; }
  friend CycloElement operator*(CycloElement lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend CycloElement operator*(const BigRational& lhs, CycloElement rhs) { return rhs *= lhs; }
  friend CycloElement operator/(const CycloElement& lhs, const CycloElement& rhs) { return lhs * rhs.inverse(); }
  friend CycloElement operator-(CycloElement x);

  /// Value equality; conductors may differ.
  friend bool operator==(const CycloElement& lhs, const CycloElement& rhs);

 private:
  CycloElement(std::uint64_t conductor, std::vector<BigInt> num, BigInt den);
  void normalize();

  std::uint64_t conductor_;
  std::vector<BigInt> num_;
  BigInt den_;
};

CycloElement add(const CycloElement& u, const CycloElement& v);
CycloElement mul(const CycloElement& u, const CycloElement& v);
CycloElement inv(const CycloElement& u);

/// zeta_n^k with conductor n.
CycloElement root_of_unity(std::uint64_t n, std::int64_t k);

/// lcm(4, denominator of t): the conductor holding cot(pi t).
std::uint64_t cot_conductor(const BigRational& t);

/// cot(pi t) = i (zeta + 1)/(zeta - 1) with zeta = e^{2 pi i t}; throws PoleError for integral t.
CycloElement cot_exact(const BigRational& t);
/// As above but represented in conductor `conductor`, a multiple of cot_conductor(t).
CycloElement cot_exact(const BigRational& t, std::uint64_t conductor);

/// cot^{(m)}(pi t) = P_m(cot(pi t)), exact.
CycloElement cot_derivative_exact(unsigned m, const BigRational& t);
CycloElement cot_derivative_exact(unsigned m, const BigRational& t, std::uint64_t conductor);
/// P_m evaluated at an arbitrary field element.
CycloElement evaluate_cot_derivative(unsigned m, const CycloElement& cot_value);

/// sum_j coeff_j e^{2 pi i j/n} with `digits` decimal digits (plus guard digits).
Complex to_complex(const CycloElement& u, int digits);

}  // namespace cotsum
