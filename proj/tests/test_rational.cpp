#include "doctest.h"

#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
#include "cotsum/rational.hpp"
#include "oracles.hpp"

using namespace cotsum;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rational literals parse strictly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == make_rational(-2, 3));
  CHECK(parse_rational("+5/10") == make_rational(1, 2));
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { parse_rational("0.5"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { parse_rational("1/2/3"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("decimal literals are exact") {
  CHECK(parse_decimal_or_rational("0.25") == make_rational(1, 4));
  CHECK(parse_decimal_or_rational("-1.5e-2") == make_rational(-3, 200));
  CHECK(parse_decimal_or_rational("7/21") == make_rational(1, 3));
}

TEST_CASE("canonical text form") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-9, 3)) == "-3");
  CHECK(to_string(BigRational(0)) == "0");
  CHECK(kind_of([] { make_rational(1, 0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("floor and fractional part follow the mathematical convention") {
  CHECK(floor(make_rational(-1, 3)) == -1);
  CHECK(fractional_part(make_rational(-1, 3)) == make_rational(2, 3));
  CHECK(floor(make_rational(7, 2)) == 3);
  CHECK(is_integer(make_rational(8, 4)));
}

TEST_CASE("Bernoulli numbers match the Akiyama-Tanigawa table") {
  for (unsigned n = 0; n <= 40; ++n) CHECK_MESSAGE(bernoulli_number(n) == oracle::bernoulli(n), "n=" << n);
  CHECK(bernoulli_number(1) == make_rational(-1, 2));
  CHECK(bernoulli_number(12) == make_rational(-691, 2730));
}

TEST_CASE("Bernoulli polynomials come from the recurrence") {
  const std::vector<BigRational> b6{make_rational(1, 42), 0, make_rational(-1, 2), 0, make_rational(5, 2), -3, 1};
  CHECK(bernoulli_polynomial(6).coefficients() == b6);
  CHECK(bernoulli_polynomial(7)(BigRational(0)) == 0);
  // B_n(1 - x) = (-1)^n B_n(x)
  for (unsigned n = 0; n <= 9; ++n) {
    const BigRational x(2, 7);
    const BigRational lhs = bernoulli_polynomial(n)(1 - x);
    const BigRational rhs = bernoulli_polynomial(n)(x);
    CHECK(lhs == (n % 2 ? BigRational(-rhs) : rhs));
  }
}

TEST_CASE("Bernoulli functions and the sawtooth") {
  CHECK(bernoulli_function(1, BigRational(3)) == 0);
  CHECK(bernoulli_function(1, make_rational(1, 4)) == make_rational(-1, 4));
  CHECK(bernoulli_function(2, make_rational(5, 4)) == bernoulli_polynomial(2)(make_rational(1, 4)));
  for (int p = -9; p <= 9; ++p) {
    const BigRational x(p, 4);
    CHECK(sawtooth(x) == oracle::sawtooth(x));
    CHECK(sawtooth(x) == bernoulli_function(1, x));
  }
}

TEST_CASE("multiplicative toolkit") {
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(euler_phi(36) == 12);
  CHECK(divisor_sigma(1, 12) == 28);
  CHECK(divisor_sigma(-1, 6) == 2);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(1) == 1);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    int s = 0;
    std::uint64_t phi_sum = 0;
    for (auto d : divisors(n)) {
      s += moebius(d);
      phi_sum += euler_phi(d);
    }
    CHECK(s == (n == 1 ? 1 : 0));
    CHECK(phi_sum == n);
  }
}

TEST_CASE("Moebius inversion over coprime residues") {
  const std::vector<std::function<BigInt(std::int64_t)>> fs{
      [](std::int64_t k) { return BigInt(k); },
      [](std::int64_t k) { return BigInt(k * k * k - 2 * k); },
      [](std::int64_t k) { return BigInt(k % 5 == 0 ? 3 : 1); },
  };
  for (const auto& f : fs)
    for (std::int64_t a = 1; a <= 6; ++a)
      for (std::int64_t b = 1; b <= 30; ++b) {
        const auto [lhs, rhs] = moebius_inversion_sides(a, b, f);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("modular inverses and the three-term Bezout identity") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(5, 1) == 1);
  CHECK(kind_of([] { mod_inverse(4, 6); }) == ErrorKind::NotCoprime);
  for (long a = 1; a <= 9; ++a)
    for (long b = 1; b <= 9; ++b)
      for (long c = 1; c <= 9; ++c) {
        if (oracle::gcd(a, b) != 1 || oracle::gcd(b, c) != 1 || oracle::gcd(a, c) != 1) continue;
        const auto t = three_term_bezout(a, b, c);
        CHECK(t.A * b * c + t.B * c * a + t.C * a * b == 1);
      }
}
