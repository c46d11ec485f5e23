#include "cotsum/numeric.hpp"

#include "cotsum/error.hpp"

namespace cotsum {

Real distance_to_integer(const Complex& w) {
  Complex offset(w.re - round(w.re), w.im);
  return abs(offset);
}

Complex cot_numeric(const Complex& w, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = std::max(ctx.working_bits(), w.precision());
  if (distance_to_integer(w) < ctx.tolerance())
    fail(ErrorKind::NearPole, "cot(pi w) evaluated within the pole tolerance of an integer");
  // cot(pi(x + iy)) = (sin 2 pi x - i sinh 2 pi y) / (cosh 2 pi y - cos 2 pi x)
  Real two_pi = Real::pi(bits) * Real(2, bits);
  Real x = two_pi * w.re;
  Real y = two_pi * w.im;
  Real den = cosh(y) - cos(x);
  return Complex(sin(x) / den, -(sinh(y) / den));
}

Complex coth_numeric(const Complex& w, const PrecisionContext& ctx) {
  Complex iw(-w.im, w.re);
  Complex c = cot_numeric(iw, ctx);
  return Complex(-std::move(c.im), std::move(c.re));
}

}  // namespace cotsum
