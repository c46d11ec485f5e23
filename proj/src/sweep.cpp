#include "cotsum/sweep.hpp"

#include <functional>
#include <limits>
#include <numeric>

#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"

namespace cotsum {

std::int64_t SweepRng::uniform(std::int64_t lo, std::int64_t hi) {
  require(lo <= hi, ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

BigRational SweepRng::fraction(std::int64_t max_den) {
  const std::int64_t den = uniform(1, max_den);
  return make_rational(uniform(0, den - 1), den);
}

std::size_t SweepResult::passed() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.pass ? 1 : 0;
  return n;
}

namespace {

using Sampler = std::function<VerificationReport(SweepRng&, std::int64_t, const SweepOptions&)>;

struct Entry {
  const char* name;
  std::int64_t max_a;
  Sampler run;
};

bool pairwise_coprime(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::gcd(a[i], a[j]) != 1) return false;
  return true;
}

std::vector<std::int64_t> coprime_tuple(SweepRng& rng, std::size_t size, std::int64_t max) {
  std::vector<std::int64_t> a(size);
  do
    for (auto& v : a) v = rng.uniform(1, max);
  while (!pairwise_coprime(a));
  return a;
}

std::vector<unsigned> orders(SweepRng& rng, std::size_t size, unsigned max) {
  std::vector<unsigned> m(size);
  for (auto& v : m) v = static_cast<unsigned>(rng.uniform(0, max));
  return m;
}

FamilyMember random_member(SweepRng& rng) {
  if (rng.coin()) return {MemberKind::Bernoulli, static_cast<unsigned>(rng.uniform(1, 6))};
  return {MemberKind::Cotangent, static_cast<unsigned>(rng.uniform(0, 4))};
}

VerificationReport sample_main(SweepRng& rng, std::int64_t max_a, const SweepOptions& opt, bool complex_shifts) {
  const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<std::int64_t> a(d + 1);
  for (auto& v : a) v = rng.uniform(1, max_a);
  // all-zero orders carry the nonzero right-hand side; draw them often
  std::vector<unsigned> m = rng.uniform(0, 3) == 0 ? std::vector<unsigned>(d + 1, 0) : orders(rng, d + 1, 3);
  std::vector<ShiftValue> z(d + 1);
  for (auto& s : z) {
    s.re = rng.fraction(4);
    if (complex_shifts) s.im = make_rational(rng.uniform(-20, 20), 40);
  }
  return verify_main_reciprocity(a, m, z, opt.exact, opt.precision);
}

VerificationReport sample_dieter(SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
  const auto abc = coprime_tuple(rng, 3, max_a);
  const BigRational a(abc[0]), b(abc[1]), c(abc[2]);
  BigRational x = rng.fraction(6), y = rng.fraction(6), z = rng.fraction(6);
  // one draw in three lands on a delta branch: solve for the last shift so
  // that one of x', y', z' is an integer
  switch (rng.uniform(0, 5)) {
    case 0:  // z' = bx - ay
      y = (b * x - BigRational(rng.uniform(-3, 3))) / a;
      break;
    case 1:  // x' = cy - bz
      z = (c * y - BigRational(rng.uniform(-3, 3))) / b;
      break;
    case 2:  // y' = az - cx
      x = (a * z - BigRational(rng.uniform(-3, 3))) / c;
      break;
    default:
      break;
  }
  return verify_dieter_reciprocity(abc[0], abc[1], abc[2], x, y, z, opt.exact);
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"dedekind", 60,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         const auto ab = coprime_tuple(rng, 2, max_a);
         return verify_dedekind_reciprocity(BigInt(static_cast<long>(ab[0])), BigInt(static_cast<long>(ab[1])));
       }},
      {"main", 10,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) { return sample_main(rng, max_a, opt, false); }},
      {"main-numeric", 10,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) { return sample_main(rng, max_a, opt, true); }},
      {"threeterm", 8,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const auto a = coprime_tuple(rng, 3, max_a);
         std::vector<unsigned> m;
         do m = orders(rng, 3, 4);
         while ((m[0] + m[1] + m[2]) % 2 == 1 || m[0] + m[1] + m[2] == 0);
         return verify_three_term_reciprocity(a[0], a[1], a[2], m[0], m[1], m[2], opt.exact);
       }},
      {"dieter", 12, sample_dieter},
      {"zagier", 11,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const bool four = rng.uniform(0, 3) == 0;
         return verify_zagier_reciprocity(coprime_tuple(rng, four ? 5 : 3, four ? std::min<std::int64_t>(max_a, 7) : max_a),
                                          opt.exact);
       }},
      {"apocot", 12,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         std::vector<std::int64_t> abc;
         do abc = {rng.uniform(1, max_a), rng.uniform(1, 7), rng.uniform(1, 7)};
         while (!pairwise_coprime(abc));
         const unsigned m = static_cast<unsigned>(rng.uniform(2, 4));
         unsigned n;
         do n = static_cast<unsigned>(rng.uniform(2, 4));
         while ((m + n) % 2 == 1);
         return verify_bernoulli_cotangent(m, n, abc[0], abc[1], abc[2], opt.exact);
       }},
      {"planepartition", 12,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const auto ab = coprime_tuple(rng, 2, max_a);
         return verify_plane_partition(static_cast<unsigned>(rng.uniform(1, 6)), ab[0], ab[1], opt.exact);
       }},
      {"fourier", 10,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         const unsigned m = static_cast<unsigned>(rng.uniform(2, 6));
         return verify_fourier_lemma(m, rng.uniform(1, max_a));
       }},
      {"sawtooth-fourier", 12,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         return verify_sawtooth_fourier(rng.uniform(1, max_a));
       }},
      {"pk-classical", 8,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         const std::int64_t n = rng.uniform(1, 12);
         const auto ab = coprime_tuple(rng, 2, max_a);
         return verify_petersson_knopp_classical(n, ab[0], ab[1]);
       }},
      {"pk-cotangent", 5,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const std::int64_t n = rng.uniform(1, 6);
         const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
         const std::int64_t a0 = rng.uniform(1, max_a);
         std::vector<std::int64_t> a(d);
         for (auto& v : a) v = rng.uniform(1, max_a);
         const unsigned m0 = static_cast<unsigned>(rng.uniform(0, 2));
         ExactOptions exact = opt.exact;
         exact.poles = PoleConvention::Regularized;
         return verify_pk_cotangent(n, a0, a, m0, orders(rng, d, 2), exact);
       }},
      {"pk-generic", 5,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         const std::int64_t n = rng.uniform(1, 6);
         const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 2));
         const bool bernoulli = rng.coin();
         std::vector<unsigned> m(d);
         for (auto& v : m) v = static_cast<unsigned>(bernoulli ? rng.uniform(1, 6) : rng.uniform(0, 4));
         const std::int64_t a = rng.uniform(1, max_a);
         std::vector<std::int64_t> a_list(d);
         for (auto& v : a_list) v = rng.uniform(1, max_a);
         return verify_pk_generic(bernoulli ? bernoulli_family(m) : cotangent_family(m), n, a, a_list);
       }},
      {"pk-zagier", 5,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const std::int64_t n = rng.uniform(1, 4);
         return verify_pk_zagier(n, coprime_tuple(rng, 3, max_a), opt.exact);
       }},
      {"distribution", 8,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions&) {
         const FamilyMember f = random_member(rng);
         const std::int64_t a = rng.uniform(1, max_a), b = rng.uniform(1, max_a);
         const BigRational x = BigRational(rng.uniform(-2, 2)) + rng.fraction(12);
         std::vector<std::int64_t> a_list(static_cast<std::size_t>(rng.uniform(1, 2)));
         for (auto& v : a_list) v = rng.uniform(1, 4);
         return verify_distribution_relation(f, a, x, b, a_list);
       }},
      {"coth", 10,
       [](SweepRng& rng, std::int64_t max_a, const SweepOptions& opt) {
         const std::int64_t a = rng.uniform(1, max_a);
         const BigRational re = make_rational(rng.uniform(-2000, 2000), 1000);
         const BigRational im = make_rational(rng.uniform(-2000, 2000), 1000);
         return coth_distribution_check(a, Complex(re, im, opt.precision.working_bits()), opt.precision);
       }},
  };
  return entries;
}

const Entry& find_entry(std::string_view identity) {
  for (const auto& e : registry())
    if (identity == e.name) return e;
  fail(ErrorKind::InvalidArgument, "unknown sweep identity '" + std::string(identity) + "'");
}

// Draws the verifier refuses are skipped, not failed.
bool is_rejection(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularConfiguration:
    case ErrorKind::ConductorExceeded:
    case ErrorKind::NearPole:
    case ErrorKind::AllIntegerShifts:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<std::string> sweep_identities() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.emplace_back(e.name);
  return names;
}

std::int64_t default_max_a(std::string_view identity) { return find_entry(identity).max_a; }

SweepResult run_sweep(std::string_view identity, const SweepOptions& options) {
  const Entry& entry = find_entry(identity);
  const std::int64_t max_a = options.max_a > 0 ? options.max_a : entry.max_a;
  SweepRng rng(options.seed);
  SweepResult result;
  result.identity = entry.name;
  const std::size_t max_attempts = options.count * options.max_attempts_factor + 10;
  for (std::size_t attempt = 0; attempt < max_attempts && result.reports.size() < options.count; ++attempt) {
    try {
      result.reports.push_back(entry.run(rng, max_a, options));
    } catch (const Error& e) {
      if (!is_rejection(e.kind())) throw;
      ++result.rejected;
    }
  }
  return result;
}

VerificationReport sweep_report(const SweepResult& result, const SweepOptions& options) {
  const std::int64_t max_a = options.max_a > 0 ? options.max_a : default_max_a(result.identity);
  VerificationReport r = aggregate_report("sweep:" + result.identity,
                                          {{"seed", options.seed},
                                           {"count", options.count},
                                           {"max_a", max_a},
                                           {"conductor_cap", options.exact.conductor_cap}},
                                          result.reports);
  // a sweep that could not collect its quota does not pass
  if (result.reports.size() < options.count) r.pass = false;
  r.notes.push_back(std::to_string(result.passed()) + "/" + std::to_string(result.reports.size()) + " passed, " +
                    std::to_string(result.rejected) + " draws rejected");
  return r;
}

}  // namespace cotsum
