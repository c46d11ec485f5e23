#include "cotsum/sums.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "cotsum/cot_derivatives.hpp"
#include "cotsum/error.hpp"
#include "cotsum/numeric.hpp"

namespace cotsum {

namespace {

// (m, conductor, p, q) with t = p/q reduced into [0, 1)
using ValueKey = std::tuple<unsigned, std::uint64_t, long, long>;

class ValueCache {
 public:
  CycloElement get(unsigned m, const BigRational& t, std::uint64_t conductor) {
    const BigRational f = fractional_part(t);
    require(f.get_num().fits_slong_p() && f.get_den().fits_slong_p(), ErrorKind::ConductorExceeded,
            "cotangent argument denominator too large");
    const ValueKey key{m, conductor, f.get_num().get_si(), f.get_den().get_si()};
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    CycloElement value = f == 0 ? CycloElement(conductor, cot_derivative_regularized_value(m))
                                : cot_derivative_exact(m, f, conductor);
    std::unique_lock lock(mutex_);
    if (values_.size() > kMaxEntries) values_.clear();
    values_.emplace(key, value);
    return value;
  }

 private:
  static constexpr std::size_t kMaxEntries = 200000;
  std::shared_mutex mutex_;
  std::map<ValueKey, CycloElement> values_;
};

ValueCache& value_cache() {
  static ValueCache cache;
  return cache;
}

void check_cap(std::uint64_t conductor, const ExactOptions& options) {
  require(conductor <= options.conductor_cap, ErrorKind::ConductorExceeded,
          "conductor " + std::to_string(conductor) + " exceeds the cap " + std::to_string(options.conductor_cap));
}

BigRational normalization(const CotSumSpec& spec) {
  return BigRational(1) / pow(BigRational(BigInt(static_cast<long>(spec.a0))), static_cast<long>(spec.m0) + 1);
}

ExactValue direct_sum(const CotSumSpec& spec, const ExactOptions& options) {
  const std::uint64_t conductor = required_conductor(spec);
  check_cap(conductor, options);
  CycloElement acc(conductor);
  for (std::int64_t k = 0; k < spec.a0; ++k) {
    CycloElement term(conductor, BigRational(1));
    bool skip = false;
    for (std::size_t j = 0; j < spec.dimension() && !skip; ++j) {
      const BigRational t = spec.argument(j, k).re;
      if (is_integer(t)) {
        if (options.poles == PoleConvention::Skip) {
          skip = true;
        } else {
          term *= cot_derivative_regularized_value(spec.m[j]);
        }
        continue;
      }
      term *= value_cache().get(spec.m[j], t, conductor);
    }
    if (!skip) acc += term;
  }
  acc *= normalization(spec);
  return ExactValue(acc);
}

// For unshifted sums the summands with gcd(k, a0) = a0/q form one Galois
// orbit: with c = cot(pi t) and u a unit mod lcm(4, q), sigma_u(c) =
// i^{u-1} cot(pi u t). The orbit sum is therefore a trace.
ExactValue orbit_sum(const CotSumSpec& spec, const ExactOptions& options) {
  check_cap(std::lcm<std::uint64_t>(4, static_cast<std::uint64_t>(spec.a0)), options);
  BigRational total(0);
  for (std::uint64_t q : divisors(static_cast<std::uint64_t>(spec.a0))) {
    const std::uint64_t conductor = std::lcm<std::uint64_t>(4, q);
    CycloElement product(conductor, BigRational(1));
    unsigned weight = 0;
    bool skip = false;
    for (std::size_t j = 0; j < spec.dimension() && !skip; ++j) {
      const std::uint64_t aj = static_cast<std::uint64_t>(spec.a[j]);
      if (aj % q == 0) {
        if (options.poles == PoleConvention::Skip) {
          skip = true;
        } else {
          product *= cot_derivative_regularized_value(spec.m[j]);
        }
        continue;
      }
      weight += spec.m[j] + 1;
      product *= value_cache().get(spec.m[j], make_rational(static_cast<long>(aj % q), static_cast<long>(q)),
                                   conductor);
    }
    // an odd number of sign flips makes the k and -k summands cancel
    if (skip || weight % 2 == 1) continue;
    total += product.trace() * BigRational(BigInt(static_cast<unsigned long>(euler_phi(q)))) /
             BigRational(BigInt(static_cast<unsigned long>(euler_phi(conductor))));
  }
  return ExactValue(total * normalization(spec));
}

std::string trim_copy(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') out += ch;
  return out;
}

BigRational parse_part(std::string_view text, bool imaginary) {
  if (imaginary && (text.empty() || text == "+")) return BigRational(1);
  if (imaginary && text == "-") return BigRational(-1);
  return parse_decimal_or_rational(text);
}

}  // namespace

std::string ShiftValue::to_string() const {
  if (im == 0) return cotsum::to_string(re);
  std::string out = re == 0 ? "" : cotsum::to_string(re);
  std::string imag = cotsum::to_string(im);
  if (!out.empty() && imag[0] != '-') out += "+";
  return out + imag + "i";
}

ShiftValue parse_shift(std::string_view raw) {
  const std::string text = trim_copy(raw);
  require(!text.empty(), ErrorKind::InvalidArgument, "empty shift");
  if (text.back() != 'i') return ShiftValue(parse_decimal_or_rational(text));
  const std::string_view body(text.data(), text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) return ShiftValue(BigRational(0), parse_part(body, true));
  return ShiftValue(parse_decimal_or_rational(body.substr(0, split)), parse_part(body.substr(split), true));
}

const ShiftValue& CotSumSpec::shift(std::size_t j) const {
  static const ShiftValue zero;
  return z.empty() ? zero : z[j];
}

bool CotSumSpec::has_real_shifts() const {
  if (!z0.is_real()) return false;
  for (const auto& s : z)
    if (!s.is_real()) return false;
  return true;
}

bool CotSumSpec::is_unshifted() const {
  if (!z0.is_zero()) return false;
  for (const auto& s : z)
    if (!s.is_zero()) return false;
  return true;
}

void CotSumSpec::validate() const {
  require(a0 >= 1, ErrorKind::InvalidArgument, "a0 must be positive");
  require(!a.empty(), ErrorKind::InvalidArgument, "at least one cotangent factor is required");
  require(m.size() == a.size(), ErrorKind::InvalidArgument, "a and m must have the same length");
  require(z.empty() || z.size() == a.size(), ErrorKind::InvalidArgument, "a and z must have the same length");
  for (auto aj : a) require(aj >= 1, ErrorKind::InvalidArgument, "the a_j must be positive");
}

ShiftValue CotSumSpec::argument(std::size_t j, std::int64_t k) const {
  const BigRational scale = make_rational(a[j], a0);
  const ShiftValue& zj = shift(j);
  return ShiftValue(scale * (BigRational(BigInt(static_cast<long>(k))) + z0.re) - zj.re, scale * z0.im - zj.im);
}

std::uint64_t required_conductor(const CotSumSpec& spec) {
  spec.validate();
  require(spec.has_real_shifts(), ErrorKind::InvalidArgument, "exact evaluation needs real shifts");
  std::uint64_t conductor = 1;
  for (std::int64_t k = 0; k < spec.a0; ++k)
    for (std::size_t j = 0; j < spec.dimension(); ++j) {
      const BigRational t = spec.argument(j, k).re;
      if (is_integer(t)) continue;
      conductor = std::lcm(conductor, cot_conductor(t));
    }
  return conductor;
}

CycloElement cot_derivative_value(unsigned m, const BigRational& t, std::uint64_t conductor) {
  return value_cache().get(m, t, conductor);
}

ExactValue dedekind_cotangent_sum(const CotSumSpec& spec, const ExactOptions& options) {
  spec.validate();
  require(spec.has_real_shifts(), ErrorKind::InvalidArgument, "exact evaluation needs real shifts");
  switch (options.strategy) {
    case SumStrategy::Direct:
      return direct_sum(spec, options);
    case SumStrategy::Orbit:
      require(spec.is_unshifted(), ErrorKind::InvalidArgument, "the orbit strategy needs all shifts zero");
      return orbit_sum(spec, options);
    case SumStrategy::Auto:
      break;
  }
  return spec.is_unshifted() ? orbit_sum(spec, options) : direct_sum(spec, options);
}

NumericSum dedekind_cotangent_sum_numeric(const CotSumSpec& spec, const PrecisionContext& ctx, PoleConvention poles) {
  spec.validate();
  const mpfr_prec_t bits = ctx.working_bits();
  const Real tol = ctx.tolerance();
  NumericSum out{Complex(bits), {}};
  for (std::int64_t k = 0; k < spec.a0; ++k) {
    Complex term(Real(1, bits), Real(0, bits));
    bool singular = false, skip = false;
    for (std::size_t j = 0; j < spec.dimension() && !skip; ++j) {
      const Complex w = spec.argument(j, k).to_complex(bits);
      if (distance_to_integer(w) < tol) {
        singular = true;
        if (poles == PoleConvention::Skip)
          skip = true;
        else
          term *= Real(cot_derivative_regularized_value(spec.m[j]), bits);
        continue;
      }
      term *= cot_derivative_numeric(spec.m[j], w, ctx);
    }
    if (singular) out.near_pole_terms.push_back(k);
    if (!skip) out.value += term;
  }
  out.value *= Real(normalization(spec), bits);
  return out;
}

Real pole_distance(const CotSumSpec& spec, std::int64_t k, const PrecisionContext& ctx) {
  spec.validate();
  const mpfr_prec_t bits = ctx.working_bits();
  Real best(1, bits);
  for (std::size_t j = 0; j < spec.dimension(); ++j) {
    Real dist = distance_to_integer(spec.argument(j, k).to_complex(bits));
    if (dist < best) best = dist;
  }
  return best;
}

}  // namespace cotsum
