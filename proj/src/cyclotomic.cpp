#include "cotsum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "cotsum/cot_derivatives.hpp"
#include "cotsum/error.hpp"

namespace cotsum {

namespace {

struct Field {
  std::uint64_t n = 1;
  std::size_t d = 1;
  IntPolynomial phi;
  // Phi_n = x^d + sum tail[i].second x^{tail[i].first}
  std::vector<std::pair<std::size_t, BigInt>> tail;
  // Tr(zeta_n^j) for 0 <= j < d
  std::vector<BigInt> trace;
  // tail again as machine integers, when every coefficient fits
  std::vector<std::pair<std::size_t, std::int64_t>> small_tail;
  bool tail_is_small = false;
};

// p * (x^d - 1)
std::vector<BigInt> times_xd_minus_one(const std::vector<BigInt>& p, std::size_t d) {
  std::vector<BigInt> out(p.size() + d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

// p / (x^d - 1), exact
std::vector<BigInt> div_xd_minus_one(const std::vector<BigInt>& p, std::size_t d) {
  require(p.size() > d, ErrorKind::InvalidArgument, "cyclotomic division underflow");
  std::vector<BigInt> q(p.size() - d);
  // p[i] = q[i-d] - q[i]
  for (std::size_t i = p.size(); i-- > d;) {
    BigInt qi = i < q.size() ? q[i] : BigInt(0);
    q[i - d] = p[i] + qi;
  }
  for (std::size_t i = 0; i < d; ++i) {
    BigInt qi = i < q.size() ? q[i] : BigInt(0);
    require(p[i] == -qi, ErrorKind::InvalidArgument, "inexact cyclotomic division");
  }
  return q;
}

std::unique_ptr<Field> build_field(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "conductor must be positive");
  std::vector<BigInt> poly{BigInt(1)};
  const auto divs = divisors(n);
  for (auto dv : divs)
    if (moebius(n / dv) == 1) poly = times_xd_minus_one(poly, dv);
  for (auto dv : divs)
    if (moebius(n / dv) == -1) poly = div_xd_minus_one(poly, dv);
  // the sign convention gives x - 1 for n = 1 and a monic polynomial otherwise
  auto field = std::make_unique<Field>();
  field->n = n;
  field->phi = IntPolynomial(poly);
  field->d = static_cast<std::size_t>(field->phi.degree());
  for (std::size_t k = 0; k < field->d; ++k)
    if (poly[k] != 0) field->tail.emplace_back(k, poly[k]);
  field->tail_is_small = true;
  for (const auto& [k, c] : field->tail) {
    if (!c.fits_slong_p()) field->tail_is_small = false;
    else field->small_tail.emplace_back(k, c.get_si());
  }
  const std::uint64_t phi_n = euler_phi(n);
  field->trace.resize(field->d);
  for (std::size_t j = 0; j < field->d; ++j) {
    const std::uint64_t g = std::gcd<std::uint64_t>(j, n);
    const std::uint64_t r = n / g;
    field->trace[j] = BigInt(static_cast<long>(moebius(r))) * BigInt(static_cast<unsigned long>(phi_n / euler_phi(r)));
  }
  return field;
}

std::shared_mutex g_field_mutex;
std::map<std::uint64_t, std::unique_ptr<Field>> g_fields;

const Field& field_for(std::uint64_t n) {
  {
    std::shared_lock lock(g_field_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;
  }
  auto built = build_field(n);
  std::unique_lock lock(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(n, std::move(built));
  return *it->second;
}

void reduce_big(std::vector<BigInt>& v, const Field& f) {
  if (v.size() > f.n) {
    for (std::size_t i = f.n; i < v.size(); ++i)
      if (v[i] != 0) v[i % f.n] += v[i];
    v.resize(f.n);
  }
  for (std::size_t i = v.size(); i-- > f.d;) {
    if (mpz_sgn(v[i].get_mpz_t()) == 0) continue;
    const std::size_t base = i - f.d;
    for (const auto& [k, c] : f.tail) mpz_submul(v[base + k].get_mpz_t(), c.get_mpz_t(), v[i].get_mpz_t());
  }
  v.resize(f.d);
}

using Wide = __int128;

// Coefficients below 2^40 keep every product and sum of a convolution of
// length < 2^20 inside 128 bits.
bool to_small(const std::vector<BigInt>& v, std::vector<std::int64_t>& out) {
  static const BigInt limit = BigInt(1) << 40;
  out.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (abs(v[i]) >= limit) return false;
    out[i] = v[i].get_si();
  }
  return true;
}

void set_wide(BigInt& z, Wide w) {
  const bool negative = w < 0;
  const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(w) : static_cast<unsigned __int128>(w);
  mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(u >> 64));
  mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
  mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(u & ~0UL));
  if (negative) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

// Product and reduction in 128-bit arithmetic; false on overflow.
bool small_product(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs, const Field& f,
                   std::vector<BigInt>& out) {
  if (!f.tail_is_small || lhs.size() >= (1U << 20)) return false;
  std::vector<std::int64_t> x, y;
  if (!to_small(lhs, x) || !to_small(rhs, y)) return false;
  const std::size_t d = x.size();
  std::vector<Wide> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    const Wide xi = x[i];
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += xi * y[j];
  }
  for (std::size_t i = prod.size(); i-- > f.d;) {
    const Wide top = prod[i];
    if (top == 0) continue;
    const std::size_t base = i - f.d;
    for (const auto& [k, c] : f.small_tail) {
      Wide t;
      if (__builtin_mul_overflow(static_cast<Wide>(c), top, &t)) return false;
      if (__builtin_sub_overflow(prod[base + k], t, &prod[base + k])) return false;
    }
  }
  out.resize(f.d);
  for (std::size_t i = 0; i < f.d; ++i) set_wide(out[i], prod[i]);
  return true;
}

bool reduce_small(std::vector<BigInt>& v, const Field& f) {
  if (!f.tail_is_small) return false;
  std::vector<std::int64_t> x;
  if (!to_small(v, x)) return false;
  std::vector<Wide> w(x.begin(), x.end());
  for (std::size_t i = w.size(); i-- > f.d;) {
    const Wide top = w[i];
    if (top == 0) continue;
    const std::size_t base = i - f.d;
    for (const auto& [k, c] : f.small_tail) {
      Wide t;
      if (__builtin_mul_overflow(static_cast<Wide>(c), top, &t)) return false;
      if (__builtin_sub_overflow(w[base + k], t, &w[base + k])) return false;
    }
  }
  v.resize(f.d);
  for (std::size_t i = 0; i < f.d; ++i) set_wide(v[i], w[i]);
  return true;
}

// Reduces a dense vector in place to the power basis of Q(zeta_n).
void reduce(std::vector<BigInt>& v, const Field& f) {
  if (v.size() <= f.d) {
    v.resize(f.d);
    return;
  }
  if (!reduce_small(v, f)) reduce_big(v, f);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t mod_u64(std::int64_t k, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = k % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

IntPolynomial cyclotomic_polynomial(std::uint64_t n) { return field_for(n).phi; }

CycloElement::CycloElement(std::uint64_t conductor) : conductor_(conductor), den_(1) {
  num_.assign(field_for(conductor).d, BigInt(0));
}

CycloElement::CycloElement(std::uint64_t conductor, const BigRational& value) : CycloElement(conductor) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycloElement::CycloElement(std::uint64_t conductor, std::vector<BigInt> num, BigInt den)
    : conductor_(conductor), num_(std::move(num)), den_(std::move(den)) {
  reduce(num_, field_for(conductor_));
  normalize();
}

void CycloElement::normalize() {
  require(den_ != 0, ErrorKind::DivisionByZero, "zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycloElement CycloElement::from_coefficients(std::uint64_t conductor, const std::vector<BigRational>& coeffs) {
  BigInt den(1);
  for (const auto& c : coeffs) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  if (num.size() < field_for(conductor).d) num.resize(field_for(conductor).d);
  return CycloElement(conductor, std::move(num), std::move(den));
}

CycloElement CycloElement::from_exponents(std::uint64_t conductor, std::vector<BigInt> coeffs, const BigInt& den) {
  if (coeffs.size() < field_for(conductor).d) coeffs.resize(field_for(conductor).d);
  return CycloElement(conductor, std::move(coeffs), den);
}

BigRational CycloElement::coefficient(std::size_t j) const {
  if (j >= num_.size()) return BigRational(0);
  return make_rational(num_[j], den_);
}

std::vector<BigRational> CycloElement::coefficients() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.push_back(make_rational(c, den_));
  return out;
}

bool CycloElement::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

BigRational CycloElement::to_rational() const {
  require(is_rational(), ErrorKind::NotRational, "cyclotomic value is not rational");
  return make_rational(num_[0], den_);
}

CycloElement CycloElement::lift(std::uint64_t m) const {
  require(m % conductor_ == 0, ErrorKind::InvalidArgument, "lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  if (is_rational()) return CycloElement(m, make_rational(num_[0], den_));
  const std::uint64_t step = m / conductor_;
  std::vector<BigInt> v(std::max<std::size_t>(m, field_for(m).d));
  for (std::size_t j = 0; j < num_.size(); ++j) v[(j * step) % m] += num_[j];
  return CycloElement(m, std::move(v), den_);
}

BigRational CycloElement::trace() const {
  const Field& f = field_for(conductor_);
  BigInt acc(0);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) mpz_addmul(acc.get_mpz_t(), num_[j].get_mpz_t(), f.trace[j].get_mpz_t());
  return make_rational(acc, den_);
}

CycloElement CycloElement::galois(std::int64_t u) const {
  require(std::gcd(mod_u64(u, conductor_), conductor_) == 1, ErrorKind::NotCoprime,
          "Galois exponent must be coprime to the conductor");
  if (is_rational()) return *this;
  const std::uint64_t uu = mod_u64(u, conductor_);
  std::vector<BigInt> v(std::max<std::size_t>(conductor_, num_.size()));
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) v[static_cast<std::size_t>((j * uu) % conductor_)] += num_[j];
  return CycloElement(conductor_, std::move(v), den_);
}

CycloElement CycloElement::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycloElement(conductor_, BigRational(1) / make_rational(num_[0], den_));
  // extended Euclid: s * u + t * Phi = gcd = const
  std::vector<BigRational> phi_coeffs;
  for (const auto& c : field_for(conductor_).phi.coefficients()) phi_coeffs.emplace_back(c);
  RationalPolynomial r0(std::move(phi_coeffs));
  RationalPolynomial r1(coefficients());
  RationalPolynomial s0, s1(std::vector<BigRational>{BigRational(1)});
  while (r1.degree() > 0) {
    RationalPolynomial q, r;
    RationalPolynomial::divmod(r0, r1, q, r);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  require(!r1.is_zero(), ErrorKind::DivisionByZero, "element is a zero divisor");
  const BigRational scale = BigRational(1) / r1.coefficient(0);
  return from_coefficients(conductor_, (scale * s1).coefficients());
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (rhs.conductor_ != conductor_) {
    const std::uint64_t m = lcm_u64(conductor_, rhs.conductor_);
    *this = lift(m);
    return *this += rhs.lift(m);
  }
  if (den_ == rhs.den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += rhs.num_[j];
  } else {
    const BigInt l = lcm(den_, rhs.den_);
    const BigInt a = l / den_, b = l / rhs.den_;
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] *= a;
      mpz_addmul(num_[j].get_mpz_t(), rhs.num_[j].get_mpz_t(), b.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) { return *this += -rhs; }

CycloElement& CycloElement::operator*=(const BigRational& rhs) {
  if (rhs == 0) {
    for (auto& c : num_) c = 0;
    den_ = 1;
    return *this;
  }
  const BigInt p = rhs.get_num();
  for (auto& c : num_) c *= p;
  den_ *= rhs.get_den();
  normalize();
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
  if (rhs.conductor_ != conductor_) {
    const std::uint64_t m = lcm_u64(conductor_, rhs.conductor_);
    *this = lift(m);
    return *this *= rhs.lift(m);
  }
  if (rhs.is_rational()) return *this *= make_rational(rhs.num_[0], rhs.den_);
  if (is_rational()) {
    const BigRational c = make_rational(num_[0], den_);
    *this = rhs;
    return *this *= c;
  }
  const Field& f = field_for(conductor_);
  std::vector<BigInt> fast;
  if (small_product(num_, rhs.num_, f, fast)) {
    num_ = std::move(fast);
    den_ *= rhs.den_;
    normalize();
    return *this;
  }
  const std::size_t d = num_.size();
  std::vector<BigInt> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (mpz_sgn(num_[i].get_mpz_t()) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (mpz_sgn(rhs.num_[j].get_mpz_t()) != 0)
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
  }
  reduce(prod, f);
  num_ = std::move(prod);
  den_ *= rhs.den_;
  normalize();
  return *this;
}

CycloElement operator-(CycloElement x) {
  for (auto& c : x.num_) c = -c;
  return x;
}

bool operator==(const CycloElement& lhs, const CycloElement& rhs) {
  if (lhs.conductor_ != rhs.conductor_) {
    const std::uint64_t m = lcm_u64(lhs.conductor_, rhs.conductor_);
    return lhs.lift(m) == rhs.lift(m);
  }
  return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

CycloElement add(const CycloElement& u, const CycloElement& v) { return u + v; }
CycloElement mul(const CycloElement& u, const CycloElement& v) { return u * v; }
CycloElement inv(const CycloElement& u) { return u.inverse(); }

CycloElement root_of_unity(std::uint64_t n, std::int64_t k) {
  require(n >= 1, ErrorKind::InvalidArgument, "root of unity order must be positive");
  std::vector<BigInt> v(std::max<std::size_t>(n, field_for(n).d));
  v[mod_u64(k, n)] = 1;
  return CycloElement::from_exponents(n, std::move(v), BigInt(1));
}

std::uint64_t cot_conductor(const BigRational& t) {
  const BigInt q = t.get_den();
  require(q.fits_ulong_p(), ErrorKind::ConductorExceeded, "denominator too large for a cyclotomic field");
  return lcm_u64(4, q.get_ui());
}

CycloElement cot_exact(const BigRational& t) { return cot_exact(t, cot_conductor(t)); }

CycloElement cot_exact(const BigRational& t, std::uint64_t conductor) {
  require(!is_integer(t), ErrorKind::PoleError, "cot(pi t) has a pole at t = " + to_string(t));
  const std::uint64_t base = cot_conductor(t);
  require(conductor % base == 0, ErrorKind::InvalidArgument, "conductor must be a multiple of lcm(4, den t)");
  // cot(pi t) = i + (2i/q) sum_{j=1}^{q-1} j zeta^j,  zeta = e^{2 pi i p/q}
  const std::uint64_t q = t.get_den().get_ui();
  BigInt p_mod = t.get_num() % t.get_den();
  if (p_mod < 0) p_mod += t.get_den();
  const std::uint64_t p = p_mod.get_ui();
  const std::uint64_t n = conductor;
  const std::uint64_t quarter = n / 4, step = n / q;
  std::vector<BigInt> v(std::max<std::size_t>(n, field_for(n).d));
  v[quarter] += static_cast<unsigned long>(q);
  for (std::uint64_t j = 1; j < q; ++j) {
    const std::uint64_t e = (quarter + ((j * p) % q) * step) % n;
    v[e] += static_cast<unsigned long>(2 * j);
  }
  return CycloElement::from_exponents(n, std::move(v), BigInt(static_cast<unsigned long>(q)));
}

CycloElement evaluate_cot_derivative(unsigned m, const CycloElement& cot_value) {
  // P_m(c) = c^{(m+1) mod 2} Q(c^2)
  if (m == 0) return cot_value;
  const CotDerivPoly pm = cot_derivative_polynomial(m);
  const auto& coeffs = pm.poly.coefficients();
  const std::size_t parity = (m + 1) % 2;
  const CycloElement c2 = cot_value * cot_value;
  CycloElement acc(cot_value.conductor());
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (k % 2 != parity) continue;
    if (!first) acc *= c2;
    first = false;
    acc += CycloElement(cot_value.conductor(), BigRational(coeffs[k]));
  }
  if (parity) acc *= cot_value;
  return acc;
}

CycloElement cot_derivative_exact(unsigned m, const BigRational& t) {
  return evaluate_cot_derivative(m, cot_exact(t));
}

CycloElement cot_derivative_exact(unsigned m, const BigRational& t, std::uint64_t conductor) {
  return evaluate_cot_derivative(m, cot_exact(t, conductor));
}

Complex to_complex(const CycloElement& u, int digits) {
  require(digits >= 1, ErrorKind::InvalidArgument, "digits must be positive");
  const mpfr_prec_t bits = bits_for_digits(digits, 10);
  const Real den(BigRational(u.denominator()), bits);
  const Real angle = Real::pi(bits) * Real(2, bits) / Real(static_cast<long>(u.conductor()), bits);
  Complex acc(bits);
  const auto& num = u.numerators();
  for (std::size_t j = 0; j < num.size(); ++j) {
    if (num[j] == 0) continue;
    const Real c(BigRational(num[j]), bits);
    if (j == 0) {
      acc.re += c;
      continue;
    }
    const Real theta = angle * Real(static_cast<long>(j), bits);
    acc.re += c * cos(theta);
    acc.im += c * sin(theta);
  }
  acc.re /= den;
  acc.im /= den;
  return acc;
}

}  // namespace cotsum
