#pragma once

// The Dedekind cotangent sum
//
//   c(a0 | a1..ad; m0 | m1..md; z0 | z1..zd)
//     = a0^{-(m0+1)} sum_{k mod a0} prod_j cot^{(mj)} pi(aj (k + z0)/a0 - zj)
//
// and the classical sums that are special cases of it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cotsum/bigfloat.hpp"
#include "cotsum/cyclotomic.hpp"
#include "cotsum/exact_value.hpp"
#include "cotsum/rational.hpp"

namespace cotsum {

// A shift re + i*im with rational parts. Real shifts are the only ones the
// exact engine accepts; complex ones go through the numeric engine.
struct ShiftValue {
  BigRational re{0};
  BigRational im{0};

  ShiftValue() = default;
  ShiftValue(const BigRational& r) : re(r) {}  // NOLINT(implicit)
  ShiftValue(const BigRational& r, const BigRational& i) : re(r), im(i) {}

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }
  Complex to_complex(mpfr_prec_t bits) const { return Complex(re, im, bits); }
  std::string to_string() const;

  friend bool operator==(const ShiftValue&, const ShiftValue&) = default;
};

/// Accepts "p/q", integers, decimals and complex forms such as "0.3+0.2i", "-i", "1/2-3/4i".
ShiftValue parse_shift(std::string_view text);

struct CotSumSpec {
  std::int64_t a0 = 1;
  std::vector<std::int64_t> a;
  unsigned m0 = 0;
  std::vector<unsigned> m;
  ShiftValue z0;
  std::vector<ShiftValue> z;  // empty means all zero

  std::size_t dimension() const { return a.size(); }
  const ShiftValue& shift(std::size_t j) const;
  bool has_real_shifts() const;
  bool is_unshifted() const;
  /// Throws InvalidArgument for mismatched lengths or non-positive moduli.
  void validate() const;
  /// a_j (k + z0)/a0 - z_j.
  ShiftValue argument(std::size_t j, std::int64_t k) const;
};

// How a factor at a pole is treated. Skip drops the whole summand (the
// definition of the sum). Regularized replaces the singular factor by the
// constant term of its Laurent expansion, which keeps the distribution
// relation of cot^{(m)}(pi x) valid at the integers.
enum class PoleConvention { Skip, Regularized };

enum class SumStrategy { Auto, Direct, Orbit };

struct ExactOptions {
  std::uint64_t conductor_cap = kDefaultConductorCap;
  PoleConvention poles = PoleConvention::Skip;
  SumStrategy strategy = SumStrategy::Auto;
};

/// Conductor of the field holding every nonsingular summand.
std::uint64_t required_conductor(const CotSumSpec& spec);

/// Exact value. Throws ConductorExceeded above the cap and InvalidArgument
/// for complex shifts. An empty sum is 0.
ExactValue dedekind_cotangent_sum(const CotSumSpec& spec, const ExactOptions& options = {});

struct NumericSum {
  Complex value;
  std::vector<std::int64_t> near_pole_terms;  // k whose summand was treated as singular
};

NumericSum dedekind_cotangent_sum_numeric(const CotSumSpec& spec, const PrecisionContext& ctx,
                                          PoleConvention poles = PoleConvention::Skip);

/// min_j distance(a_j (k + z0)/a0 - z_j, Z).
Real pole_distance(const CotSumSpec& spec, std::int64_t k, const PrecisionContext& ctx);

/// cot^{(m)}(pi t) exactly, or the regularized constant at integers; memoized.
CycloElement cot_derivative_value(unsigned m, const BigRational& t, std::uint64_t conductor);

// ---- named sums --------------------------------------------------------

enum class ClassicalMethod { Direct, Cotangent, Fast };

/// s(a, b) = sum_{k mod b} ((ka/b))((k/b)).
BigRational classical_dedekind_sum(const BigInt& a, const BigInt& b, ClassicalMethod method = ClassicalMethod::Fast,
                                   const ExactOptions& options = {});

/// sum_{k mod a} B_m(kb/a) B_n(kc/a) with periodic Bernoulli functions.
BigRational dedekind_bernoulli_sum(unsigned m, unsigned n, std::int64_t a, std::int64_t b, std::int64_t c);

/// sum_{k=0}^{b-1} (k/b) B_n(ka/b).
BigRational apostol_sum(unsigned n, std::int64_t a, std::int64_t b);

/// sum_{k mod b} ((a(k+y)/b - x)) (((k+y)/b)).
BigRational dedekind_rademacher_sum(std::int64_t a, std::int64_t b, const BigRational& x, const BigRational& y);

/// sum_{k mod a} B_m(b(k+x)/a - y) B_n(c(k+x)/a - z).
BigRational generalized_dr_sum(unsigned m, unsigned n, std::int64_t a, std::int64_t b, std::int64_t c,
                               const BigRational& x, const BigRational& y, const BigRational& z);

/// (1/c) sum_{k mod c} cot pi(a(k+z)/c - x) cot pi(b(k+z)/c - y), singular terms skipped.
ExactValue dieter_cotangent_sum(std::int64_t a, std::int64_t b, std::int64_t c, const BigRational& x,
                                const BigRational& y, const BigRational& z, const ExactOptions& options = {});

/// s(a0; a1..ad) = (-1)^{d/2}/a0 sum_{k=1}^{a0-1} prod cot(pi k aj/a0); zero for odd d.
BigRational zagier_sum(std::int64_t a0, const std::vector<std::int64_t>& a, const ExactOptions& options = {});

enum class BerndtKind { SAlphaBeta, S, S1, S2, S3, S4, S5 };

std::optional<BerndtKind> parse_berndt_kind(std::string_view name);
std::string_view to_string(BerndtKind kind);

ExactValue berndt_sum(BerndtKind kind, std::int64_t a, std::int64_t b, std::optional<std::int64_t> alpha = {},
                      std::optional<std::int64_t> beta = {}, const ExactOptions& options = {});

/// sum_{k=1}^{a-1} B_m(k/a) ((kb/a)).
BigRational plane_partition_sum(unsigned m, std::int64_t a, std::int64_t b);

}  // namespace cotsum
