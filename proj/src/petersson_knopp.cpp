#include <numeric>

#include "cotsum/cot_derivatives.hpp"
#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
#include "identity_util.hpp"

namespace cotsum {

using detail::json_list;
using detail::json_rational;

namespace {

BigRational q(std::int64_t v) { return BigRational(BigInt(static_cast<long>(v))); }

// Calls visit(r) for every r in [0, b)^d.
template <typename Visit>
void for_each_residue_vector(std::int64_t b, std::size_t d, Visit&& visit) {
  std::vector<std::int64_t> r(d, 0);
  while (true) {
    visit(r);
    std::size_t j = 0;
    while (j < d && ++r[j] == b) r[j++] = 0;
    if (j == d) return;
  }
}

using Function = std::function<ExactValue(const BigRational&)>;

VerificationReport weight_check(const Function& f, int w, std::int64_t a, const BigRational& x,
                                const std::string& name) {
  ExactValue lhs;
  for (std::int64_t k = 0; k < a; ++k) lhs += f(x + make_rational(k, a));
  const ExactValue rhs = ExactValue(pow(q(a), w)) * f(q(a) * x);
  return exact_report("distribution-weight", {{"f", name}, {"a", a}, {"x", json_rational(x)}}, lhs, rhs);
}

VerificationReport twisted_check(const Function& f, int w, std::int64_t a, std::int64_t b, const BigRational& x,
                                 const std::string& name) {
  const std::int64_t g = std::gcd(a, b);
  ExactValue lhs;
  for (std::int64_t k = 0; k < a; ++k) lhs += f(x + make_rational(k * b, a));
  const ExactValue rhs = ExactValue(pow(q(g), 1 - w) * pow(q(a), w)) * f(q(a) * x / q(g));
  return exact_report("distribution-twisted", {{"f", name}, {"a", a}, {"b", b}, {"x", json_rational(x)}}, lhs,
                      rhs);
}

void require_positive_all(const std::vector<std::int64_t>& a) {
  for (auto v : a) require(v >= 1, ErrorKind::InvalidArgument, "moduli must be positive");
}

}  // namespace

int FamilyMember::weight() const {
  return kind == MemberKind::Bernoulli ? 1 - static_cast<int>(order) : static_cast<int>(order) + 1;
}

ExactValue FamilyMember::operator()(const BigRational& x) const {
  if (kind == MemberKind::Bernoulli) return bernoulli_function(order, x);
  if (is_integer(x)) return cot_derivative_regularized_value(order);
  return cot_derivative_value(order, x, cot_conductor(x));
}

std::string FamilyMember::name() const {
  return (kind == MemberKind::Bernoulli ? "B" : "cot") + std::to_string(order);
}

WeightFamily make_family(const std::vector<FamilyMember>& members) {
  WeightFamily family;
  for (std::size_t j = 0; j < members.size(); ++j) {
    family.name += (j ? "," : "") + members[j].name();
    family.weights.push_back(members[j].weight());
  }
  family.members = members;
  family.evaluate = [members](std::size_t j, const BigRational& x) { return members.at(j)(x); };
  return family;
}

WeightFamily bernoulli_family(const std::vector<unsigned>& orders) {
  std::vector<FamilyMember> members;
  for (auto m : orders) members.push_back({MemberKind::Bernoulli, m});
  return make_family(members);
}

WeightFamily cotangent_family(const std::vector<unsigned>& orders) {
  std::vector<FamilyMember> members;
  for (auto m : orders) members.push_back({MemberKind::Cotangent, m});
  return make_family(members);
}

ExactValue product_sum(const WeightFamily& family, std::int64_t a, const std::vector<std::int64_t>& a_list) {
  require(a >= 1, ErrorKind::InvalidArgument, "a >= 1");
  require(a_list.size() == family.dimension(), ErrorKind::InvalidArgument,
          "the family and the coefficient list must have the same length");
  ExactValue acc;
  for (std::int64_t k = 0; k < a; ++k) {
    ExactValue term(BigRational(1));
    for (std::size_t j = 0; j < a_list.size() && !term.is_zero(); ++j)
      term *= family.evaluate(j, make_rational(k * a_list[j], a));
    acc += term;
  }
  return acc;
}

VerificationReport verify_distribution_relation(const FamilyMember& f, std::int64_t a, const BigRational& x,
                                                std::int64_t b, const std::vector<std::int64_t>& a_list) {
  require(a >= 1 && b >= 1, ErrorKind::InvalidArgument, "a and b must be positive");
  require(!a_list.empty(), ErrorKind::InvalidArgument, "a_list must not be empty");
  require_positive_all(a_list);
  const Function fn = [f](const BigRational& t) { return f(t); };
  std::vector<VerificationReport> checks;
  checks.push_back(weight_check(fn, f.weight(), a, x, f.name()));
  checks.push_back(twisted_check(fn, f.weight(), a, b, x, f.name()));

  const WeightFamily copies = make_family(std::vector<FamilyMember>(a_list.size(), f));
  std::vector<std::int64_t> scaled;
  for (auto v : a_list) scaled.push_back(v * b);
  checks.push_back(exact_report("distribution-product",
                                {{"f", f.name()}, {"a", a}, {"b", b}, {"a_list", json_list(a_list)}},
                                product_sum(copies, a * b, scaled), ExactValue(q(b)) * product_sum(copies, a, a_list)));

  VerificationReport r = aggregate_report(
      "distribution", {{"f", f.name()}, {"a", a}, {"b", b}, {"x", json_rational(x)}, {"a_list", json_list(a_list)}},
      std::move(checks));
  r.notes.push_back("weight " + std::to_string(f.weight()));
  return r;
}

void check_family_weights(const WeightFamily& family) {
  require(family.evaluate != nullptr, ErrorKind::InvalidArgument, "family without an evaluator");
  const BigRational points[] = {BigRational(0), make_rational(1, 5), make_rational(2, 7)};
  for (std::size_t j = 0; j < family.dimension(); ++j) {
    const Function fn = [&family, j](const BigRational& t) { return family.evaluate(j, t); };
    const int w = family.weights[j];
    for (std::int64_t a = 2; a <= 4; ++a)
      for (const auto& x : points) {
        const bool ok = weight_check(fn, w, a, x, family.name).pass && twisted_check(fn, w, a, 2, x, family.name).pass;
        require(ok, ErrorKind::WeightViolation,
                "member " + std::to_string(j) + " of " + family.name + " fails the distribution relation at a = " +
                    std::to_string(a) + ", x = " + to_string(x));
      }
  }
}

VerificationReport verify_petersson_knopp_classical(std::int64_t n, std::int64_t a, std::int64_t b) {
  require_positive_all({n, a, b});
  require(std::gcd(a, b) == 1, ErrorKind::NotCoprime, "gcd(a, b) != 1");
  auto s = [](std::int64_t h, std::int64_t k) {
    return classical_dedekind_sum(BigInt(static_cast<long>(h)), BigInt(static_cast<long>(k)), ClassicalMethod::Direct);
  };
  BigRational lhs(0);
  for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
    const std::int64_t sd = static_cast<std::int64_t>(d);
    for (std::int64_t k = 0; k < sd; ++k) lhs += s((n / sd) * b + k * a, a * sd);
  }
  const BigRational rhs = divisor_sigma(1, static_cast<std::uint64_t>(n)) * s(b, a);
  return exact_report("pk-classical", {{"n", n}, {"a", a}, {"b", b}}, lhs, rhs);
}

VerificationReport verify_pk_cotangent(std::int64_t n, std::int64_t a0, const std::vector<std::int64_t>& a,
                                       unsigned m0, const std::vector<unsigned>& m, const ExactOptions& options) {
  require_positive_all({n, a0});
  require(!a.empty() && a.size() == m.size(), ErrorKind::InvalidArgument, "a and m must be nonempty and equally long");
  require_positive_all(a);
  const long d = static_cast<long>(a.size());
  long msum = 0;
  for (auto mj : m) msum += mj;
  ExactOptions opts = options;
  opts.strategy = SumStrategy::Auto;

  BigRational lhs(0);
  for (std::uint64_t ub : divisors(static_cast<std::uint64_t>(n))) {
    const std::int64_t b = static_cast<std::int64_t>(ub);
    BigRational inner(0);
    for_each_residue_vector(b, a.size(), [&](const std::vector<std::int64_t>& r) {
      CotSumSpec spec;
      spec.a0 = a0 * b;
      spec.m0 = m0;
      spec.m = m;
      for (std::size_t j = 0; j < a.size(); ++j) spec.a.push_back((n / b) * a[j] + r[j] * a0);
      inner += dedekind_cotangent_sum(spec, opts).rational();
    });
    lhs += pow(q(b), static_cast<long>(m0) + 1 - msum - d) * inner;
  }
  CotSumSpec base;
  base.a0 = a0;
  base.a = a;
  base.m0 = m0;
  base.m = m;
  const BigRational rhs = q(n) * divisor_sigma(-msum - 1, static_cast<std::uint64_t>(n)) *
                          dedekind_cotangent_sum(base, opts).rational();
  VerificationReport r =
      exact_report("pk-cotangent", {{"n", n}, {"a0", a0}, {"a", json_list(a)}, {"m0", m0}, {"m", json_list(m)}},
                   lhs, rhs);
  r.notes.push_back(options.poles == PoleConvention::Regularized ? "poles: regularized" : "poles: skipped");
  return r;
}

VerificationReport verify_pk_cotangent(std::int64_t n, std::int64_t a0, const std::vector<std::int64_t>& a,
                                       unsigned m0, const std::vector<unsigned>& m) {
  ExactOptions options;
  options.poles = PoleConvention::Regularized;
  return verify_pk_cotangent(n, a0, a, m0, m, options);
}

VerificationReport verify_pk_generic(const WeightFamily& family, std::int64_t n, std::int64_t a,
                                     const std::vector<std::int64_t>& a_list) {
  require_positive_all({n, a});
  require(!a_list.empty() && a_list.size() == family.dimension(), ErrorKind::InvalidArgument,
          "a_list must match the family dimension");
  require_positive_all(a_list);
  check_family_weights(family);
  const long d = static_cast<long>(a_list.size());
  long wsum = 0;
  for (int w : family.weights) wsum += w;

  ExactValue lhs;
  for (std::uint64_t ub : divisors(static_cast<std::uint64_t>(n))) {
    const std::int64_t b = static_cast<std::int64_t>(ub);
    ExactValue inner;
    for_each_residue_vector(b, a_list.size(), [&](const std::vector<std::int64_t>& r) {
      std::vector<std::int64_t> coeffs;
      for (std::size_t j = 0; j < a_list.size(); ++j) coeffs.push_back((n / b) * a_list[j] + r[j] * a);
      inner += product_sum(family, a * b, coeffs);
    });
    lhs += ExactValue(pow(q(b), -wsum)) * inner;
  }
  const ExactValue rhs = ExactValue(q(n) * divisor_sigma(d - 1 - wsum, static_cast<std::uint64_t>(n))) *
                         product_sum(family, a, a_list);
  VerificationReport r = exact_report(
      "pk-generic", {{"family", family.name}, {"n", n}, {"a", a}, {"a_list", json_list(a_list)}}, lhs, rhs);
  r.notes.push_back("weights " + json_list(family.weights).dump());
  return r;
}

VerificationReport verify_pk_zagier(std::int64_t n, const std::vector<std::int64_t>& a, const ExactOptions& options) {
  require(n >= 1, ErrorKind::InvalidArgument, "n >= 1");
  require(a.size() >= 2, ErrorKind::InvalidArgument, "need a0 and at least one a_j");
  require_positive_all(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      require(std::gcd(a[i], a[j]) == 1, ErrorKind::NotCoprime,
              "gcd(" + std::to_string(a[i]) + ", " + std::to_string(a[j]) + ") != 1");
  const std::int64_t a0 = a[0];
  const std::vector<std::int64_t> rest(a.begin() + 1, a.end());
  const long d = static_cast<long>(rest.size());
  ExactOptions opts = options;
  opts.poles = PoleConvention::Skip;

  // the lifted arguments need not be coprime to a0 b, so s is taken in its
  // cotangent form rather than through zagier_sum
  auto s = [&](std::int64_t top, const std::vector<std::int64_t>& bottom) {
    if (d % 2 == 1) return BigRational(0);
    CotSumSpec spec;
    spec.a0 = top;
    spec.a = bottom;
    spec.m.assign(bottom.size(), 0);
    const BigRational c = dedekind_cotangent_sum(spec, opts).rational();
    return (d / 2) % 2 == 0 ? c : BigRational(-c);
  };

  BigRational lhs(0);
  for (std::uint64_t ub : divisors(static_cast<std::uint64_t>(n))) {
    const std::int64_t b = static_cast<std::int64_t>(ub);
    BigRational inner(0);
    for_each_residue_vector(b, rest.size(), [&](const std::vector<std::int64_t>& r) {
      std::vector<std::int64_t> args;
      for (std::size_t j = 0; j < rest.size(); ++j) args.push_back((n / b) * rest[j] + r[j] * a0);
      inner += s(a0 * b, args);
    });
    lhs += pow(q(b), 1 - d) * inner;
  }
  const BigRational rhs = divisor_sigma(1, static_cast<std::uint64_t>(n)) * zagier_sum(a0, rest, options);
  return exact_report("pk-zagier", {{"n", n}, {"a", json_list(a)}}, lhs, rhs);
}

std::pair<BigInt, BigInt> moebius_inversion_sides(std::int64_t a, std::int64_t b,
                                                  const std::function<BigInt(std::int64_t)>& f) {
  require(a >= 1 && b >= 1, ErrorKind::InvalidArgument, "a and b must be positive");
  BigInt lhs(0), rhs(0);
  for (std::int64_t k = 1; k <= a * b; ++k)
    if (std::gcd(k, b) == 1) lhs += f(k);
  for (std::uint64_t ut : divisors(static_cast<std::uint64_t>(b))) {
    const std::int64_t t = static_cast<std::int64_t>(ut);
    BigInt inner(0);
    for (std::int64_t k = 1; k <= a * b / t; ++k) inner += f(t * k);
    rhs += moebius(ut) * inner;
  }
  return {lhs, rhs};
}

}  // namespace cotsum
