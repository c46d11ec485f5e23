#include "doctest.h"

#include "corpus.hpp"
#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
#include "cotsum/numeric.hpp"
#include "cotsum/sums.hpp"
#include "oracles.hpp"

using namespace cotsum;

namespace {

Complex point(double re, double im, const PrecisionContext& ctx) {
  Complex z(ctx.working_bits());
  mpfr_set_d(z.re.get(), re, MPFR_RNDN);
  mpfr_set_d(z.im.get(), im, MPFR_RNDN);
  return z;
}

}  // namespace

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS(PrecisionContext::make(0), Error);
  CHECK_THROWS_AS(PrecisionContext::make(60, make_rational(1, 2)), Error);
  const auto ctx = PrecisionContext::make(80);
  CHECK(ctx.pole_tolerance == PrecisionContext::default_pole_tolerance(80));
  CHECK(ctx.working_bits() > bits_for_digits(80));
}

TEST_CASE("cot against double precision at complex points") {
  const PrecisionContext ctx;
  for (double re : {0.1, 0.37, -0.8, 1.25})
    for (double im : {0.0, 0.2, -1.5}) {
      const Complex c = cot_numeric(point(re, im, ctx), ctx);
      const auto want = oracle::cot_pi({re, im});
      CHECK(c.re.to_double() == doctest::Approx(want.real()).epsilon(1e-12));
      CHECK(c.im.to_double() == doctest::Approx(want.imag()).epsilon(1e-12));
    }
}

TEST_CASE("large imaginary parts approach -+i") {
  const PrecisionContext ctx;
  const Complex up = cot_numeric(point(0.3, 40.0, ctx), ctx);
  const Complex down = cot_numeric(point(0.3, -40.0, ctx), ctx);
  CHECK(abs(up - Complex(BigRational(0), BigRational(-1), ctx.working_bits())) < ctx.epsilon(100));
  CHECK(abs(down - Complex(BigRational(0), BigRational(1), ctx.working_bits())) < ctx.epsilon(100));
}

TEST_CASE("pole gate") {
  const PrecisionContext ctx;
  Complex w(BigRational(3), BigRational(0), ctx.working_bits());
  w.re += ctx.epsilon(40);
  try {
    cot_numeric(w, ctx);
    FAIL("no NearPole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NearPole);
  }
  CHECK_THROWS_AS(coth_numeric(Complex(BigRational(0), BigRational(2), ctx.working_bits()), ctx), Error);
}

TEST_CASE("accuracy scales with the requested digits") {
  for (int digits : {20, 60, 150}) {
    const PrecisionContext ctx = PrecisionContext::make(digits);
    const Complex c = cot_numeric(Complex(make_rational(1, 3), BigRational(0), ctx.working_bits()), ctx);
    const Complex err = c * c - Complex(make_rational(1, 3), BigRational(0), ctx.working_bits());
    CHECK(abs(err) < ctx.epsilon(digits));
    if (digits > 20) {
      const PrecisionContext low = PrecisionContext::make(20);
      CHECK(ctx.epsilon(digits) < low.epsilon(20));
    }
  }
}

TEST_CASE("coth distribution at random complex points") {
  const PrecisionContext ctx;
  for (std::int64_t a = 1; a <= 10; ++a)
    for (double re : {0.13, -0.41})
      for (double im : {0.07, 0.33}) CHECK(coth_distribution_check(a, point(re, im, ctx), ctx).pass);
}

TEST_CASE("numeric sums agree with exact sums on the corpus") {
  const PrecisionContext ctx;
  const Real tol = ctx.epsilon(50);
  for (const auto& spec : load_exact_corpus()) {
    const ExactValue exact = dedekind_cotangent_sum(spec);
    const NumericSum numeric = dedekind_cotangent_sum_numeric(spec, ctx);
    CHECK(abs(to_complex(exact, 60) - numeric.value) < tol);
  }
}

TEST_CASE("complex shifts against a double-precision direct sum") {
  CotSumSpec spec;
  spec.a0 = 5;
  spec.a = {2, 3};
  spec.m = {0, 0};
  spec.z0 = ShiftValue(make_rational(1, 10), make_rational(1, 5));
  spec.z = {ShiftValue(BigRational(0)), ShiftValue(make_rational(1, 3), make_rational(-1, 4))};
  const PrecisionContext ctx;
  const Complex got = dedekind_cotangent_sum_numeric(spec, ctx).value;
  std::complex<double> want = 0;
  const std::complex<double> z0(0.1, 0.2), z1(0, 0), z2(1.0 / 3, -0.25);
  for (int k = 0; k < 5; ++k)
    want += oracle::cot_pi(2.0 * (static_cast<double>(k) + z0) / 5.0 - z1) * oracle::cot_pi(3.0 * (static_cast<double>(k) + z0) / 5.0 - z2);
  want /= 5.0;
  CHECK(got.re.to_double() == doctest::Approx(want.real()).epsilon(1e-10));
  CHECK(got.im.to_double() == doctest::Approx(want.imag()).epsilon(1e-10));
}
