#include "cotsum/cot_derivatives.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "cotsum/error.hpp"

namespace cotsum {

namespace {

std::shared_mutex g_poly_mutex;
std::deque<IntPolynomial> g_polys{IntPolynomial{0, 1}};

}  // namespace

CotDerivPoly cot_derivative_polynomial(unsigned m) {
  {
    std::shared_lock lock(g_poly_mutex);
    if (m < g_polys.size()) return {m, g_polys[m]};
  }
  std::unique_lock lock(g_poly_mutex);
  const IntPolynomial minus_one_minus_c2{-1, 0, -1};
  while (g_polys.size() <= m) g_polys.push_back(minus_one_minus_c2 * g_polys.back().derivative());
  return {m, g_polys[m]};
}

BigRational LaurentExpansion::at(int exponent) const {
  if (exponent < lowest_exponent || exponent > highest_exponent()) return BigRational(0);
  return coeffs[static_cast<std::size_t>(exponent - lowest_exponent)];
}

LaurentExpansion cot_laurent_coefficients(unsigned m, std::int64_t a, int order) {
  require(a >= 1, ErrorKind::InvalidArgument, "Laurent expansion needs a >= 1");
  LaurentExpansion out;
  out.lowest_exponent = -static_cast<int>(m) - 1;
  if (order < out.lowest_exponent) return out;
  out.coeffs.assign(static_cast<std::size_t>(order - out.lowest_exponent + 1), BigRational(0));
  const BigRational scale(BigInt(static_cast<long>(a)));
  // (-1)^m m! / (pi a)^{m+1}  z^{-(m+1)}
  BigRational principal = BigRational(factorial(m)) / pow(scale, static_cast<long>(m) + 1);
  if (m % 2) principal = -principal;
  out.coeffs[0] = principal;
  // (-1)^k 2^{2k-1} B_{2k} / (k (2k-1-m)!)  (pi a z)^{2k-1-m},  2k >= m+1
  for (unsigned k = (m + 2) / 2; static_cast<int>(2 * k - 1 - m) <= order; ++k) {
    const int e = static_cast<int>(2 * k - 1 - m);
    BigRational c = pow(BigRational(2), 2 * static_cast<long>(k) - 1) * bernoulli_number(2 * k) /
                    (BigRational(k) * BigRational(factorial(static_cast<unsigned>(e))));
    if (k % 2) c = -c;
    out.coeffs[static_cast<std::size_t>(e - out.lowest_exponent)] = c * pow(scale, e);
  }
  return out;
}

LaurentExpansion multiply(const LaurentExpansion& lhs, const LaurentExpansion& rhs, int order) {
  LaurentExpansion out;
  out.lowest_exponent = lhs.lowest_exponent + rhs.lowest_exponent;
  if (order < out.lowest_exponent || lhs.coeffs.empty() || rhs.coeffs.empty()) return out;
  out.coeffs.assign(static_cast<std::size_t>(order - out.lowest_exponent + 1), BigRational(0));
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) {
    if (lhs.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs.size(); ++j) {
      const int e = lhs.lowest_exponent + rhs.lowest_exponent + static_cast<int>(i + j);
      if (e > order) break;
      out.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
    }
  }
  return out;
}

BigRational cot_derivative_regularized_value(unsigned m) {
  return cot_laurent_coefficients(m, 1, 0).at(0);
}

Complex evaluate_cot_derivative(unsigned m, const Complex& cot_value) {
  const CotDerivPoly pm = cot_derivative_polynomial(m);
  const auto& coeffs = pm.poly.coefficients();
  const mpfr_prec_t bits = cot_value.precision();
  Complex acc(bits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= cot_value;
    acc.re += Real(BigRational(*it), bits);
  }
  return acc;
}

Complex cot_derivative_numeric(unsigned m, const Complex& w, const PrecisionContext& ctx) {
  return evaluate_cot_derivative(m, cot_numeric(w, ctx));
}

}  // namespace cotsum
