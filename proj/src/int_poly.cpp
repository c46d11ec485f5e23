#include "cotsum/int_poly.hpp"

#include <algorithm>

#include "cotsum/error.hpp"

namespace cotsum {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, const BigInt& coeff) {
  std::vector<BigInt> c(power + 1);
  c[power] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& scalar, const IntPolynomial& poly) {
  std::vector<BigInt> c(poly.coeffs_);
  for (auto& x : c) x *= scalar;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::exact_div_monic(const IntPolynomial& divisor) const {
  require(!divisor.is_zero() && divisor.coeffs_.back() == 1, ErrorKind::InvalidArgument, "divisor must be monic");
  std::vector<BigInt> r = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) {
    require(is_zero(), ErrorKind::InvalidArgument, "inexact polynomial division");
    return {};
  }
  std::vector<BigInt> q(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    BigInt f = r[i];
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) mpz_submul(r[i - dd + j].get_mpz_t(), f.get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
  }
  for (int i = 0; i < dd; ++i) require(r[i] == 0, ErrorKind::InvalidArgument, "inexact polynomial division");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(std::string_view var) const {
  std::vector<BigRational> c(coeffs_.begin(), coeffs_.end());
  return RationalPolynomial(std::move(c)).to_string(var);
}

}  // namespace cotsum
