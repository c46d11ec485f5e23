#pragma once

// cot^{(m)}(x) = P_m(cot x) for integer polynomials P_m, and the Laurent data
// of cot^{(m)}(pi a z) at z = 0.

#include <vector>

#include "cotsum/bigfloat.hpp"
#include "cotsum/int_poly.hpp"
#include "cotsum/numeric.hpp"
#include "cotsum/rational.hpp"

namespace cotsum {

struct CotDerivPoly {
  unsigned order = 0;
  IntPolynomial poly;
};

/// P_0(c) = c, P_{m+1}(c) = -(1 + c^2) P_m'(c). Cached; safe for concurrent use.
CotDerivPoly cot_derivative_polynomial(unsigned m);

// Laurent expansion of cot^{(m)}(pi a z) about z = 0. The coefficient of z^e
// is coeff(e) * pi^e; the pi power always equals the z exponent, so only the
// rational part is stored.
struct LaurentExpansion {
  int lowest_exponent = 0;
  std::vector<BigRational> coeffs;  // coeffs[i] belongs to z^{lowest_exponent + i}

  int highest_exponent() const { return lowest_exponent + static_cast<int>(coeffs.size()) - 1; }
  BigRational at(int exponent) const;
};

/// Principal part (-1)^m m!/(pi a)^{m+1} z^{-(m+1)} plus the regular tail up to z^order.
LaurentExpansion cot_laurent_coefficients(unsigned m, std::int64_t a, int order);

/// Product of expansions, truncated at z^order.
LaurentExpansion multiply(const LaurentExpansion& lhs, const LaurentExpansion& rhs, int order);

/// Constant term of cot^{(m)} at its pole: (-1)^k 2^m B_{m+1}/k for odd m = 2k - 1, zero for even m.
/// This is the value that keeps the distribution relation valid at the integers.
BigRational cot_derivative_regularized_value(unsigned m);

/// P_m(cot(pi w)). Throws NearPole inside the context's pole tolerance.
Complex cot_derivative_numeric(unsigned m, const Complex& w, const PrecisionContext& ctx);
/// P_m at a given (numeric) cotangent value.
Complex evaluate_cot_derivative(unsigned m, const Complex& cot_value);

}  // namespace cotsum
