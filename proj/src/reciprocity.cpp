#include <numeric>

#include "cotsum/cot_derivatives.hpp"
#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
#include "cotsum/numeric.hpp"
#include "identity_util.hpp"

namespace cotsum {

using detail::json_list;
using detail::json_rational;

namespace {

BigRational q(std::int64_t v) { return BigRational(BigInt(static_cast<long>(v))); }

int sign_of_power(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_pairwise_coprime(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      require(std::gcd(a[i], a[j]) == 1, ErrorKind::NotCoprime,
              "gcd(" + std::to_string(a[i]) + ", " + std::to_string(a[j]) + ") != 1");
}

void require_positive_all(const std::vector<std::int64_t>& a) {
  for (auto v : a) require(v >= 1, ErrorKind::InvalidArgument, "moduli must be positive");
}

// All (l_1..l_parts) >= 0 with sum total.
void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned l = 0; l <= total; ++l) {
    cur.push_back(l);
    compositions(total - l, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned total, std::size_t parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur;
  compositions(total, parts, cur, out);
  return out;
}

struct Block {
  BigRational weight;
  CotSumSpec spec;
};

// The residue contributions at the poles of the n-th factor.
std::vector<Block> reciprocity_blocks(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                                      const std::vector<ShiftValue>& z, std::size_t n) {
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != n) others.push_back(k);
  std::vector<Block> blocks;
  for (const auto& l : compositions(m[n], others.size())) {
    Block b;
    b.weight = q(sign_of_power(m[n])) * BigRational(factorial(m[n]));
    b.spec.a0 = a[n];
    b.spec.m0 = m[n];
    b.spec.z0 = z[n];
    for (std::size_t t = 0; t < others.size(); ++t) {
      const std::size_t k = others[t];
      b.weight *= pow(q(a[k]), l[t]) / BigRational(factorial(l[t]));
      b.spec.a.push_back(a[k]);
      b.spec.m.push_back(m[k] + l[t]);
      b.spec.z.push_back(z[k]);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

void validate_main(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                   const std::vector<ShiftValue>& z) {
  require(a.size() >= 2, ErrorKind::InvalidArgument, "need at least two moduli (d >= 1)");
  require(m.size() == a.size() && z.size() == a.size(), ErrorKind::InvalidArgument,
          "a, m and z must have the same length");
  require_positive_all(a);
}

nlohmann::json shift_list(const std::vector<ShiftValue>& z) {
  auto out = nlohmann::json::array();
  for (const auto& s : z) out.push_back(s.to_string());
  return out;
}

}  // namespace

VerificationReport verify_dedekind_reciprocity(const BigInt& a, const BigInt& b) {
  require(a >= 1 && b >= 1, ErrorKind::InvalidArgument, "a and b must be positive");
  require(gcd(a, b) == 1, ErrorKind::NotCoprime, "gcd(a, b) != 1");
  const BigRational lhs = classical_dedekind_sum(a, b, ClassicalMethod::Direct) +
                          classical_dedekind_sum(b, a, ClassicalMethod::Direct);
  const BigRational A(a), B(b);
  const BigRational rhs = BigRational(-1, 4) + (A / B + BigRational(1) / (A * B) + B / A) / 12;
  return exact_report("dedekind", {{"a", to_string(a)}, {"b", to_string(b)}}, lhs, rhs);
}

bool is_admissible(const std::vector<std::int64_t>& a, const std::vector<ShiftValue>& z) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      // (m + z_i)/a_i - (n + z_j)/a_j is integral for some m, n iff
      // (a_j z_i - a_i z_j)/gcd(a_i, a_j) is an integer
      const BigRational im = q(a[j]) * z[i].im - q(a[i]) * z[j].im;
      if (im != 0) continue;
      const BigRational re = (q(a[j]) * z[i].re - q(a[i]) * z[j].re) / q(std::gcd(a[i], a[j]));
      if (is_integer(re)) return false;
    }
  return true;
}

std::uint64_t main_reciprocity_conductor(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                                         const std::vector<ShiftValue>& z) {
  validate_main(a, m, z);
  std::uint64_t conductor = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    // conductors do not depend on the orders, so one block per n suffices
    CotSumSpec spec = reciprocity_blocks(a, std::vector<unsigned>(a.size(), 0), z, n).front().spec;
    conductor = std::lcm(conductor, required_conductor(spec));
  }
  return conductor;
}

VerificationReport verify_main_reciprocity(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                                           const std::vector<ShiftValue>& z, const ExactOptions& options,
                                           const PrecisionContext& ctx) {
  validate_main(a, m, z);
  require(is_admissible(a, z), ErrorKind::SingularConfiguration,
          "two factors share a pole; the reciprocity law needs simple poles");
  const std::size_t d = a.size() - 1;
  bool all_zero = true;
  for (auto mj : m) all_zero = all_zero && mj == 0;
  const BigRational rhs = (all_zero && d % 2 == 0) ? q(sign_of_power(static_cast<long>(d / 2))) : BigRational(0);
  const nlohmann::json params = {{"a", json_list(a)}, {"m", json_list(m)}, {"z", shift_list(z)}};

  bool real = true;
  for (const auto& s : z) real = real && s.is_real();

  if (!real) {
    const mpfr_prec_t bits = ctx.working_bits();
    Complex lhs(bits);
    for (std::size_t n = 0; n < a.size(); ++n)
      for (const auto& block : reciprocity_blocks(a, m, z, n)) {
        NumericSum part = dedekind_cotangent_sum_numeric(block.spec, ctx);
        require(part.near_pole_terms.empty(), ErrorKind::NearPole, "a summand lies within the pole tolerance");
        lhs += part.value * Real(block.weight, bits);
      }
    VerificationReport r = numeric_report("main", params, lhs, Complex(rhs, BigRational(0), bits),
                                          ctx.epsilon(ctx.digits / 2), ctx.digits);
    r.notes.push_back("complex shifts: evaluated numerically");
    return r;
  }

  const std::uint64_t conductor = main_reciprocity_conductor(a, m, z);
  require(conductor <= options.conductor_cap, ErrorKind::ConductorExceeded,
          "conductor " + std::to_string(conductor) + " exceeds the cap " + std::to_string(options.conductor_cap));
  ExactOptions opts = options;
  opts.strategy = SumStrategy::Auto;
  ExactValue lhs;
  for (std::size_t n = 0; n < a.size(); ++n)
    for (const auto& block : reciprocity_blocks(a, m, z, n))
      lhs += ExactValue(block.weight) * dedekind_cotangent_sum(block.spec, opts);
  return exact_report("main", params, lhs, rhs);
}

BigRational phi_term(std::int64_t a0, std::int64_t a1, std::int64_t a2, unsigned m0, unsigned m1, unsigned m2) {
  require_positive_all({a0, a1, a2});
  const unsigned total = m0 + m1 + m2;
  require(total % 2 == 0, ErrorKind::ParityError, "m0 + m1 + m2 must be even");
  require(total != 0, ErrorKind::AllZeroOrders, "the orders must not all vanish");
  const std::int64_t as[3] = {a0, a1, a2};
  const unsigned ms[3] = {m0, m1, m2};

  // block n pairs the principal part at a_n with the tails of the other two
  BigRational inner(0);
  for (int n = 0; n < 3; ++n) {
    const int p = (n == 0) ? 1 : 0;
    const int r = (n == 2) ? 1 : 2;
    BigRational acc(0);
    // 2(kp + kr - 1) = total, 2kp >= mp + 1, 2kr >= mr + 1
    for (unsigned kp = 1; 2 * kp <= total + 2; ++kp) {
      const unsigned kr = (total + 2) / 2 - kp;
      if (kr < 1 || 2 * kp < ms[p] + 1 || 2 * kr < ms[r] + 1) continue;
      const unsigned ep = 2 * kp - 1 - ms[p], er = 2 * kr - 1 - ms[r];
      const unsigned l = (n == 1) ? er : ep;  // the binomial index as displayed
      if (l > ms[n]) continue;
      acc += BigRational(binomial(ms[n], l)) * bernoulli_number(2 * kp) * bernoulli_number(2 * kr) /
             q(static_cast<std::int64_t>(kp) * kr) * pow(q(as[p]), ep) * pow(q(as[r]), er);
    }
    inner += q(sign_of_power(ms[n])) / pow(q(as[n]), static_cast<long>(ms[n]) + 1) * acc;
  }
  BigRational value = pow(BigRational(-4), static_cast<long>(total / 2)) * inner;

  BigRational tail(0);
  for (int s = 0; s < 3; ++s) {
    const int i = (s == 2) ? 1 : 0;
    const int j = (s == 0) ? 1 : 2;
    const int k = 3 - i - j;  // the excluded index
    const long e = (static_cast<long>(ms[i]) + ms[j] - ms[k]) / 2;
    tail += q(sign_of_power(e)) * BigRational(factorial(ms[i]) * factorial(ms[j])) *
            pow(q(as[k]), static_cast<long>(ms[i] + ms[j]) + 1) /
            (BigRational(factorial(ms[i] + ms[j] + 1)) * pow(q(as[i]), static_cast<long>(ms[i]) + 1) *
             pow(q(as[j]), static_cast<long>(ms[j]) + 1));
  }
  value += pow(BigRational(2), static_cast<long>(total) + 2) * bernoulli_number(total + 2) /
           q(static_cast<std::int64_t>(total) + 2) * tail;
  return value;
}

VerificationReport verify_three_term_reciprocity(std::int64_t a0, std::int64_t a1, std::int64_t a2, unsigned m0,
                                                 unsigned m1, unsigned m2, const ExactOptions& options) {
  require_positive_all({a0, a1, a2});
  require_pairwise_coprime({a0, a1, a2});
  const BigRational rhs = phi_term(a0, a1, a2, m0, m1, m2);
  const std::vector<std::int64_t> a{a0, a1, a2};
  const std::vector<unsigned> m{m0, m1, m2};
  const std::vector<ShiftValue> z(3);
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;  // the k = 0 summand holds the triple pole at 0
  ExactValue lhs;
  for (std::size_t n = 0; n < 3; ++n)
    for (const auto& block : reciprocity_blocks(a, m, z, n))
      lhs += ExactValue(block.weight) * dedekind_cotangent_sum(block.spec, opts);
  return exact_report("threeterm", {{"a", json_list(a)}, {"m", json_list(m)}}, lhs, rhs);
}

VerificationReport verify_dieter_reciprocity(std::int64_t a, std::int64_t b, std::int64_t c, const BigRational& x,
                                             const BigRational& y, const BigRational& z,
                                             const ExactOptions& options) {
  require_positive_all({a, b, c});
  require_pairwise_coprime({a, b, c});
  require(!(is_integer(x) && is_integer(y) && is_integer(z)), ErrorKind::AllIntegerShifts,
          "x, y, z must not all be integers");
  const nlohmann::json params = {{"a", a},
                                 {"b", b},
                                 {"c", c},
                                 {"x", json_rational(x)},
                                 {"y", json_rational(y)},
                                 {"z", json_rational(z)}};

  const ExactValue lhs = dieter_cotangent_sum(a, b, c, x, y, z, options) +
                         dieter_cotangent_sum(b, c, a, y, z, x, options) +
                         dieter_cotangent_sum(c, a, b, z, x, y, options);

  const BezoutTriple bz = three_term_bezout(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)),
                                            BigInt(static_cast<long>(c)));
  const BigRational A(bz.A), B(bz.B), C(bz.C), qa = q(a), qb = q(b), qc = q(c);
  const BigRational xp = qc * y - qb * z, yp = qa * z - qc * x, zp = qb * x - qa * y;

  ExactValue rhs(BigRational(-1));
  std::vector<std::string> active;
  auto correction = [&](const BigRational& delta_arg, const BigRational& scale, const BigRational& arg,
                        const char* name) {
    if (!is_integer(delta_arg)) return;
    require(!is_integer(arg), ErrorKind::SingularConfiguration,
            std::string("delta(") + name + ") term sits on a pole of cot'; the reciprocity formula does not cover it");
    rhs -= ExactValue(scale) * ExactValue(cot_derivative_exact(1, arg));
    active.emplace_back(name);
  };
  correction(zp, qc / (qa * qb), A * qc * xp - (B * qc + C * qb) * yp, "z'");
  correction(xp, qa / (qb * qc), B * qa * yp - (C * qa + A * qc) * zp, "x'");
  correction(yp, qb / (qa * qc), C * qb * zp - (A * qb + B * qa) * xp, "y'");

  VerificationReport r = exact_report("dieter", params, lhs, rhs);
  for (const auto& name : active) r.notes.push_back("delta(" + name + ") correction active");
  return r;
}

BigRational zagier_h(const std::vector<std::int64_t>& a) {
  require(!a.empty(), ErrorKind::InvalidArgument, "need at least one modulus");
  require_positive_all(a);
  const std::size_t d = a.size() - 1;
  require(d % 2 == 0, ErrorKind::OddDimension, "h is defined for even d");
  BigRational acc(0);
  for (const auto& k : compositions(static_cast<unsigned>(d / 2), a.size())) {
    BigRational term(1);
    for (std::size_t j = 0; j < a.size(); ++j)
      term *= bernoulli_number(2 * k[j]) * pow(q(a[j]), 2 * static_cast<long>(k[j])) /
              BigRational(factorial(2 * k[j]));
    acc += term;
  }
  BigRational prod(1);
  for (auto v : a) prod *= q(v);
  return pow(BigRational(2), static_cast<long>(d)) / prod * acc;
}

VerificationReport verify_zagier_reciprocity(const std::vector<std::int64_t>& a, const ExactOptions& options) {
  require(!a.empty(), ErrorKind::InvalidArgument, "need at least one modulus");
  require_positive_all(a);
  require((a.size() - 1) % 2 == 0, ErrorKind::OddDimension, "the reciprocity law needs even d");
  require_pairwise_coprime(a);
  BigRational lhs(0);
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::vector<std::int64_t> rest;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != n) rest.push_back(a[k]);
    lhs += zagier_sum(a[n], rest, options);
  }
  return exact_report("zagier", {{"a", json_list(a)}}, lhs, BigRational(BigRational(1) - zagier_h(a)));
}

VerificationReport verify_bernoulli_cotangent(unsigned m, unsigned n, std::int64_t a, std::int64_t b,
                                              std::int64_t c, const ExactOptions& options) {
  require_positive_all({a, b, c});
  require_pairwise_coprime({a, b, c});
  require(m >= 2 && n >= 2, ErrorKind::InvalidArgument, "m, n >= 2");
  require((m + n) % 2 == 0, ErrorKind::ParityError, "m and n must have the same parity");
  const BigRational lhs = dedekind_bernoulli_sum(m, n, a, b, c);
  CotSumSpec spec;
  spec.a0 = a;
  spec.a = {b, c};
  spec.m0 = m + n - 2;
  spec.m = {n - 1, m - 1};
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;
  const long half = (static_cast<long>(m) - static_cast<long>(n)) / 2;
  const BigRational scale = q(static_cast<std::int64_t>(m) * n * sign_of_power(half)) /
                            pow(BigRational(2), static_cast<long>(m + n));
  const ExactValue rhs = ExactValue(scale) * dedekind_cotangent_sum(spec, opts) +
                         ExactValue(bernoulli_number(m) * bernoulli_number(n) /
                                    pow(q(a), static_cast<long>(m + n) - 1));
  return exact_report("bernoulli-cotangent", {{"m", m}, {"n", n}, {"a", a}, {"b", b}, {"c", c}}, lhs, rhs);
}

VerificationReport verify_plane_partition(unsigned m, std::int64_t a, std::int64_t b, const ExactOptions& options) {
  require(m >= 1, ErrorKind::InvalidArgument, "m >= 1");
  require(a >= 1 && b >= 1, ErrorKind::InvalidArgument, "a and b must be positive");
  require(std::gcd(a, b) == 1, ErrorKind::NotCoprime, "gcd(a, b) != 1");
  const BigRational lhs = plane_partition_sum(m, a, b);
  const nlohmann::json params = {{"m", m}, {"a", a}, {"b", b}};
  if (m % 2 == 0) {
    // both sides are odd under k -> a - k
    VerificationReport r = exact_report("planepartition", params, lhs, BigRational(0));
    r.notes.push_back("even m: both sides vanish by symmetry");
    return r;
  }
  CotSumSpec spec;
  spec.a0 = a;
  spec.a = {1, b};
  spec.m0 = m - 1;
  spec.m = {0, m - 1};
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;
  const BigRational scale = q(static_cast<std::int64_t>(m) * sign_of_power((static_cast<long>(m) - 1) / 2)) /
                            pow(BigRational(2), static_cast<long>(m) + 1);
  return exact_report("planepartition", params, lhs, ExactValue(scale) * dedekind_cotangent_sum(spec, opts));
}

VerificationReport verify_fourier_lemma(unsigned m, std::int64_t p) {
  require(m >= 2, ErrorKind::InvalidArgument, "m >= 2");
  require(p >= 1, ErrorKind::InvalidArgument, "p >= 1");
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  const std::uint64_t N = std::lcm<std::uint64_t>(4, up);
  const std::int64_t sN = static_cast<std::int64_t>(N);
  // m (i/2p)^m
  const CycloElement scale = root_of_unity(N, static_cast<std::int64_t>(m % 4) * (sN / 4)) *
                             (q(m) / pow(q(2 * p), static_cast<long>(m)));
  const BigRational constant = bernoulli_number(m) / pow(q(-p), static_cast<long>(m));
  std::vector<CycloElement> cots;
  for (std::int64_t k = 1; k < p; ++k) cots.push_back(cot_derivative_value(m - 1, make_rational(k, p), N));
  std::vector<VerificationReport> checks;
  for (std::int64_t n = 0; n < p; ++n) {
    CycloElement sum(N);
    for (std::int64_t k = 1; k < p; ++k)
      sum += cots[static_cast<std::size_t>(k - 1)] * root_of_unity(N, ((k * n) % p) * (sN / p));
    const ExactValue rhs = ExactValue(CycloElement(N, constant) + scale * sum);
    checks.push_back(exact_report("fourier", {{"m", m}, {"p", p}, {"n", n}},
                                  bernoulli_function(m, make_rational(n, p)), rhs));
  }
  return aggregate_report("fourier", {{"m", m}, {"p", p}}, std::move(checks));
}

VerificationReport verify_sawtooth_fourier(std::int64_t p) {
  require(p >= 1, ErrorKind::InvalidArgument, "p >= 1");
  const std::uint64_t N = std::lcm<std::uint64_t>(4, static_cast<std::uint64_t>(p));
  const std::int64_t sN = static_cast<std::int64_t>(N);
  const CycloElement scale = root_of_unity(N, sN / 4) * make_rational(1, 2 * p);
  std::vector<VerificationReport> checks;
  for (std::int64_t n = 0; n < p; ++n) {
    CycloElement sum(N);
    for (std::int64_t k = 1; k < p; ++k)
      sum += cot_exact(make_rational(k, p), N) * root_of_unity(N, ((k * n) % p) * (sN / p));
    checks.push_back(exact_report("sawtooth-fourier", {{"p", p}, {"n", n}}, sawtooth(make_rational(n, p)),
                                  ExactValue(scale * sum)));
  }
  return aggregate_report("sawtooth-fourier", {{"p", p}}, std::move(checks));
}

VerificationReport coth_distribution_check(std::int64_t a, const Complex& z, const PrecisionContext& ctx) {
  require(a >= 1, ErrorKind::InvalidArgument, "a >= 1");
  const mpfr_prec_t bits = ctx.working_bits();
  Complex lhs(bits);
  for (std::int64_t k = 0; k < a; ++k) {
    Complex w = z;
    w.im += Real(make_rational(k, a), bits);
    lhs += coth_numeric(w, ctx);
  }
  Complex az = z * Real(a, bits);
  const Complex rhs = coth_numeric(az, ctx) * Real(a, bits);
  const int digits = ctx.digits;
  return numeric_report("coth-distribution",
                        {{"a", a}, {"z", {{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}}}}, lhs,
                        rhs, ctx.epsilon(digits - 20 > 0 ? digits - 20 : digits / 2), digits);
}

}  // namespace cotsum
