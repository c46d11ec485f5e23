#include <numeric>

#include "cotsum/error.hpp"
#include "cotsum/sums.hpp"

namespace cotsum {

namespace {

BigRational ratio(std::int64_t p, std::int64_t q) { return make_rational(p, q); }

void require_positive(std::int64_t v, const char* name) {
  require(v >= 1, ErrorKind::InvalidArgument, std::string(name) + " must be positive");
}

void require_coprime(std::int64_t a, std::int64_t b) {
  require(std::gcd(a, b) == 1, ErrorKind::NotCoprime,
          "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
}

BigRational fast_dedekind(BigInt a, BigInt b) {
  require(b >= 1, ErrorKind::InvalidArgument, "b must be positive");
  require(gcd(a, b) == 1, ErrorKind::NotCoprime, "the reciprocity recursion needs gcd(a, b) = 1");
  BigRational acc(0);
  int sign = 1;
  // s(a,b) = -s(b,a) - 1/4 + (a^2 + b^2 + 1)/(12ab), and s(a,b) only depends on a mod b
  while (b > 1) {
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const BigRational step = make_rational(BigInt(a * a + b * b + 1), BigInt(12 * a * b)) - BigRational(1, 4);
    if (sign > 0)
      acc += step;
    else
      acc -= step;
    sign = -sign;
    std::swap(a, b);
  }
  return acc;
}

BigRational direct_dedekind(const BigInt& a, const BigInt& b) {
  require(b >= 1, ErrorKind::InvalidArgument, "b must be positive");
  // ((r/b)) = (2r - b)/(2b) off the integers
  if (b < (1L << 20)) {
    const long bb = b.get_si();
    BigInt am = a % b;
    if (am < 0) am += b;
    const long aa = am.get_si();
    long acc = 0, r = 0;
    for (long k = 1; k < bb; ++k) {
      r += aa;
      if (r >= bb) r -= bb;
      if (r != 0) acc += (2 * r - bb) * (2 * k - bb);
    }
    return make_rational(BigInt(acc), BigInt(4) * b * b);
  }
  BigInt acc(0), r(0), am = a % b;
  if (am < 0) am += b;
  for (BigInt k = 1; k < b; ++k) {
    r += am;
    if (r >= b) r -= b;
    if (r != 0) acc += (2 * r - b) * (2 * k - b);
  }
  return make_rational(acc, BigInt(4) * b * b);
}

BigRational cotangent_dedekind(const BigInt& a, const BigInt& b, const ExactOptions& options) {
  require(b >= 1, ErrorKind::InvalidArgument, "b must be positive");
  require(b.fits_slong_p(), ErrorKind::ConductorExceeded, "b too large for the cotangent representation");
  BigInt am = a % b;
  if (am < 0) am += b;
  if (am == 0) am = b;
  CotSumSpec spec;
  spec.a0 = b.get_si();
  spec.a = {am.get_si(), 1};
  spec.m = {0, 0};
  return dedekind_cotangent_sum(spec, options).rational() / 4;
}

int parity_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

}  // namespace

BigRational classical_dedekind_sum(const BigInt& a, const BigInt& b, ClassicalMethod method,
                                   const ExactOptions& options) {
  switch (method) {
    case ClassicalMethod::Direct:
      return direct_dedekind(a, b);
    case ClassicalMethod::Cotangent:
      return cotangent_dedekind(a, b, options);
    case ClassicalMethod::Fast:
      break;
  }
  return fast_dedekind(a, b);
}

BigRational dedekind_bernoulli_sum(unsigned m, unsigned n, std::int64_t a, std::int64_t b, std::int64_t c) {
  require_positive(a, "a");
  BigRational acc(0);
  for (std::int64_t k = 0; k < a; ++k)
    acc += bernoulli_function(m, ratio(k * b, a)) * bernoulli_function(n, ratio(k * c, a));
  return acc;
}

BigRational apostol_sum(unsigned n, std::int64_t a, std::int64_t b) {
  require_positive(b, "b");
  BigRational acc(0);
  for (std::int64_t k = 1; k < b; ++k) acc += ratio(k, b) * bernoulli_function(n, ratio(k * a, b));
  return acc;
}

BigRational dedekind_rademacher_sum(std::int64_t a, std::int64_t b, const BigRational& x, const BigRational& y) {
  require_positive(b, "b");
  BigRational acc(0);
  for (std::int64_t k = 0; k < b; ++k) {
    const BigRational u = (BigRational(BigInt(static_cast<long>(k))) + y) / BigRational(BigInt(static_cast<long>(b)));
    acc += sawtooth(BigRational(BigInt(static_cast<long>(a))) * u - x) * sawtooth(u);
  }
  return acc;
}

BigRational generalized_dr_sum(unsigned m, unsigned n, std::int64_t a, std::int64_t b, std::int64_t c,
                               const BigRational& x, const BigRational& y, const BigRational& z) {
  require_positive(a, "a");
  BigRational acc(0);
  for (std::int64_t k = 0; k < a; ++k) {
    const BigRational u = (BigRational(BigInt(static_cast<long>(k))) + x) / BigRational(BigInt(static_cast<long>(a)));
    acc += bernoulli_function(m, BigRational(BigInt(static_cast<long>(b))) * u - y) *
           bernoulli_function(n, BigRational(BigInt(static_cast<long>(c))) * u - z);
  }
  return acc;
}

ExactValue dieter_cotangent_sum(std::int64_t a, std::int64_t b, std::int64_t c, const BigRational& x,
                                const BigRational& y, const BigRational& z, const ExactOptions& options) {
  CotSumSpec spec;
  spec.a0 = c;
  spec.a = {a, b};
  spec.m = {0, 0};
  spec.z0 = z;
  spec.z = {x, y};
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;
  return dedekind_cotangent_sum(spec, opts);
}

BigRational zagier_sum(std::int64_t a0, const std::vector<std::int64_t>& a, const ExactOptions& options) {
  require_positive(a0, "a0");
  for (auto aj : a) {
    require_positive(aj, "a_j");
    require_coprime(aj, a0);
  }
  // d = 0: the empty product is 1 for each of the a0 - 1 summands
  if (a.empty()) return make_rational(a0 - 1, a0);
  if (a.size() % 2 == 1) return BigRational(0);
  CotSumSpec spec;
  spec.a0 = a0;
  spec.a = a;
  spec.m.assign(a.size(), 0);
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;
  BigRational value = dedekind_cotangent_sum(spec, opts).rational();
  return (a.size() / 2) % 2 == 0 ? value : BigRational(-value);
}

std::optional<BerndtKind> parse_berndt_kind(std::string_view name) {
  if (name == "s_alpha_beta" || name == "s-alpha-beta" || name == "salphabeta") return BerndtKind::SAlphaBeta;
  if (name == "S") return BerndtKind::S;
  if (name == "s1") return BerndtKind::S1;
  if (name == "s2") return BerndtKind::S2;
  if (name == "s3") return BerndtKind::S3;
  if (name == "s4") return BerndtKind::S4;
  if (name == "s5") return BerndtKind::S5;
  return std::nullopt;
}

std::string_view to_string(BerndtKind kind) {
  switch (kind) {
    case BerndtKind::SAlphaBeta: return "s_alpha_beta";
    case BerndtKind::S: return "S";
    case BerndtKind::S1: return "s1";
    case BerndtKind::S2: return "s2";
    case BerndtKind::S3: return "s3";
    case BerndtKind::S4: return "s4";
    case BerndtKind::S5: return "s5";
  }
  return "?";
}

ExactValue berndt_sum(BerndtKind kind, std::int64_t a, std::int64_t b, std::optional<std::int64_t> alpha,
                      std::optional<std::int64_t> beta, const ExactOptions& options) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_coprime(a, b);
  BigRational acc(0);
  switch (kind) {
    case BerndtKind::S:
      for (std::int64_t k = 1; k < b; ++k) acc += parity_sign(k + 1 + floor_div(a * k, b));
      return acc;
    case BerndtKind::S1:
      for (std::int64_t k = 1; k <= b; ++k) acc += parity_sign(floor_div(a * k, b)) * sawtooth(ratio(k, b));
      return acc;
    case BerndtKind::S2:
      for (std::int64_t k = 1; k <= b; ++k) acc += parity_sign(k) * sawtooth(ratio(k, b)) * sawtooth(ratio(k * a, b));
      return acc;
    case BerndtKind::S3:
      for (std::int64_t k = 1; k <= b; ++k) acc += parity_sign(k) * sawtooth(ratio(k * a, b));
      return acc;
    case BerndtKind::S4:
      for (std::int64_t k = 1; k < b; ++k) acc += parity_sign(floor_div(a * k, b));
      return acc;
    case BerndtKind::S5:
      for (std::int64_t k = 1; k <= b; ++k) acc += parity_sign(k + floor_div(a * k, b)) * sawtooth(ratio(k, b));
      return acc;
    case BerndtKind::SAlphaBeta:
      break;
  }
  require(alpha.has_value() && beta.has_value(), ErrorKind::MissingParameters, "s_alpha_beta needs alpha and beta");
  require(*alpha >= 0 && *beta >= 0, ErrorKind::InvalidArgument, "alpha and beta must be nonnegative");
  const std::uint64_t n = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b);
  require(n <= options.conductor_cap, ErrorKind::ConductorExceeded,
          "conductor " + std::to_string(n) + " exceeds the cap " + std::to_string(options.conductor_cap));
  const std::int64_t al = *alpha % a, be = *beta % b;
  const std::int64_t ainv = mod_inverse(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b))).get_si();
  const std::int64_t ab = a * b;
  // e^{2 pi i k(alpha/a + beta/b)} = zeta_{ab}^{k(alpha b + beta a)}
  const std::int64_t step = (al * b + be * a) % ab;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(ab));
  for (std::int64_t k = 1; k < ab; ++k) {
    const std::int64_t r = (k * ainv) % b;
    if (r == 0) continue;
    const std::int64_t e = (k * step) % ab;
    coeffs[static_cast<std::size_t>(e)] += BigInt(static_cast<long>((2 * k - ab) * (2 * r - b)));
  }
  return ExactValue(CycloElement::from_exponents(n, std::move(coeffs), BigInt(4) * BigInt(static_cast<long>(ab)) *
                                                                          BigInt(static_cast<long>(b))));
}

BigRational plane_partition_sum(unsigned m, std::int64_t a, std::int64_t b) {
  require_positive(a, "a");
  BigRational acc(0);
  for (std::int64_t k = 1; k < a; ++k) acc += bernoulli_function(m, ratio(k, a)) * sawtooth(ratio(k * b, a));
  return acc;
}

}  // namespace cotsum
