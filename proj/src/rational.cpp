#include "cotsum/rational.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <shared_mutex>

#include "cotsum/error.hpp"

namespace cotsum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::ConductorExceeded: return "ConductorExceeded";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::AllZeroOrders: return "AllZeroOrders";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::SingularConfiguration: return "SingularConfiguration";
    case ErrorKind::WeightViolation: return "WeightViolation";
    case ErrorKind::AllIntegerShifts: return "AllIntegerShifts";
    case ErrorKind::MissingParameters: return "MissingParameters";
  }
  return "Unknown";
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorKind::DivisionByZero, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor(const BigRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigRational fractional_part(const BigRational& x) { return x - BigRational(floor(x)); }

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

std::string to_string(const BigRational& x) { return x.get_str(); }
std::string to_string(const BigInt& x) { return x.get_str(); }

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  BigInt num, den(1);
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) && parse_integer(text.substr(slash + 1), den) &&
                      text[slash + 1] != '-' && text[slash + 1] != '+';
  require(ok, ErrorKind::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  require(den != 0, ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

BigRational parse_decimal_or_rational(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  std::string s(text);
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "not a decimal literal: '" + s + "'"); };
  long exponent = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    BigInt ex;
    if (!parse_integer(std::string_view(s).substr(e + 1), ex) || !ex.fits_slong_p()) bad();
    exponent = ex.get_si();
    s.resize(e);
  }
  auto dot = s.find('.');
  std::string mantissa = s;
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(s.size() - dot - 1);
    mantissa.erase(dot, 1);
    if (mantissa.empty() || mantissa == "-" || mantissa == "+") bad();
  }
  BigInt m;
  if (!parse_integer(mantissa, m)) bad();
  return BigRational(m) * pow(BigRational(10), exponent);
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    require(base != 0, ErrorKind::DivisionByZero, "zero to a negative power");
    return pow(BigRational(1) / base, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  std::vector<BigRational> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coefficient(i) + rhs.coefficient(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  return lhs + BigRational(-1) * rhs;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const BigRational& scalar, const RationalPolynomial& poly) {
  std::vector<BigRational> c(poly.coeffs_);
  for (auto& x : c) x *= scalar;
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::divmod(const RationalPolynomial& num, const RationalPolynomial& den, RationalPolynomial& quot,
                                RationalPolynomial& rem) {
  require(!den.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<BigRational> r = num.coeffs_;
  const int dd = den.degree();
  std::vector<BigRational> q(std::max(0, num.degree() - dd + 1));
  const BigRational lead = den.coeffs_.back();
  for (int i = num.degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    BigRational f = r[i] / lead;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * den.coeffs_[j];
  }
  quot = RationalPolynomial(std::move(q));
  rem = RationalPolynomial(std::move(r));
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += cotsum::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {

std::shared_mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};

}  // namespace

BigRational bernoulli_number(unsigned k) {
  {
    std::shared_lock lock(g_bernoulli_mutex);
    if (k < g_bernoulli.size()) return g_bernoulli[k];
  }
  std::unique_lock lock(g_bernoulli_mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
  while (g_bernoulli.size() <= k) {
    const unsigned n = static_cast<unsigned>(g_bernoulli.size());
    if (n >= 3 && n % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    BigRational acc(0);
    for (unsigned j = 0; j < n; ++j) acc += BigRational(binomial(n + 1, j)) * g_bernoulli[j];
    BigRational b = -acc / BigRational(n + 1);
    b.canonicalize();
    g_bernoulli.push_back(b);
  }
  return g_bernoulli[k];
}

RationalPolynomial bernoulli_polynomial(unsigned k) {
  std::vector<BigRational> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[k - j] = BigRational(binomial(k, j)) * bernoulli_number(j);
  return RationalPolynomial(std::move(c));
}

BigRational bernoulli_function(unsigned k, const BigRational& x) {
  require(k >= 1, ErrorKind::InvalidArgument, "Bernoulli function order must be positive");
  if (k == 1) return sawtooth(x);
  return bernoulli_polynomial(k)(fractional_part(x));
}

BigRational sawtooth(const BigRational& x) {
  if (is_integer(x)) return BigRational(0);
  return fractional_part(x) - BigRational(1, 2);
}

// ---------------------------------------------------------------------------
// Arithmetic functions

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "divisors of zero");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "euler_phi of zero");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

BigRational divisor_sigma(long m, std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "divisor_sigma needs n >= 1");
  BigRational acc(0);
  for (auto d : divisors(n)) acc += pow(BigRational(BigInt(static_cast<unsigned long>(d))), m);
  return acc;
}

int moebius(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "moebius needs n >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

BigInt mod_inverse(const BigInt& a, const BigInt& b) {
  require(b >= 1, ErrorKind::InvalidArgument, "modulus must be positive");
  require(gcd(a, b) == 1, ErrorKind::NotCoprime, "gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
  if (b == 1) return BigInt(1);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return inv;
}

BezoutTriple three_term_bezout(const BigInt& a, const BigInt& b, const BigInt& c) {
  require(a >= 1 && b >= 1 && c >= 1, ErrorKind::InvalidArgument, "three_term_bezout needs positive integers");
  require(gcd(a, b) == 1 && gcd(b, c) == 1 && gcd(a, c) == 1, ErrorKind::NotCoprime,
          "arguments must be pairwise coprime");
  // u*bc + v*ca = gcd(bc, ca) = c, then s*c + t*ab = 1.
  BigInt g, u, v, s, t;
  BigInt bc = b * c, ca = c * a, ab = a * b;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), bc.get_mpz_t(), ca.get_mpz_t());
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), ab.get_mpz_t());
  return {s * u, s * v, t};
}

}  // namespace cotsum
