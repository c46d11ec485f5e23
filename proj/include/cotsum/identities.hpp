#pragma once

// Verifiers for the reciprocity laws and Petersson-Knopp identities. Each one
// evaluates both sides with separate code paths and returns a report; only
// precondition violations throw.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cotsum/bigfloat.hpp"
#include "cotsum/exact_value.hpp"
#include "cotsum/report.hpp"
#include "cotsum/sums.hpp"

namespace cotsum {

// ---- reciprocity --------------------------------------------------------

/// s(a,b) + s(b,a) = -1/4 + (a/b + 1/(ab) + b/a)/12, sums by the sawtooth definition.
VerificationReport verify_dedekind_reciprocity(const BigInt& a, const BigInt& b);

/// For all i != j, no integers m, n with (m + z_i)/a_i - (n + z_j)/a_j integral.
bool is_admissible(const std::vector<std::int64_t>& a, const std::vector<ShiftValue>& z);

/// The conductor the exact evaluation of every block needs (lcm over blocks).
std::uint64_t main_reciprocity_conductor(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                                         const std::vector<ShiftValue>& z);

/// sum over n of (-1)^{m_n} m_n! sum_l prod a_k^{l_k}/l_k! c(a_n | a_k; m_n | m_k + l_k; z_n | z_k)
/// against (-1)^{d/2} when all m vanish and d is even, 0 otherwise. Exact for real
/// shifts, numeric (labelled) otherwise. Throws SingularConfiguration if not admissible.
VerificationReport verify_main_reciprocity(const std::vector<std::int64_t>& a, const std::vector<unsigned>& m,
                                           const std::vector<ShiftValue>& z, const ExactOptions& options = {},
                                           const PrecisionContext& ctx = {});

/// The Bernoulli-number closed form on the right of the three-term law.
BigRational phi_term(std::int64_t a0, std::int64_t a1, std::int64_t a2, unsigned m0, unsigned m1, unsigned m2);

VerificationReport verify_three_term_reciprocity(std::int64_t a0, std::int64_t a1, std::int64_t a2, unsigned m0,
                                                 unsigned m1, unsigned m2, const ExactOptions& options = {});

VerificationReport verify_dieter_reciprocity(std::int64_t a, std::int64_t b, std::int64_t c, const BigRational& x,
                                             const BigRational& y, const BigRational& z,
                                             const ExactOptions& options = {});

/// (2^d/(a0...ad)) sum_{k0+...+kd = d/2} prod B_{2kj} aj^{2kj}/(2kj)!.
BigRational zagier_h(const std::vector<std::int64_t>& a);

VerificationReport verify_zagier_reciprocity(const std::vector<std::int64_t>& a, const ExactOptions& options = {});

/// s_{m,n}(a; b, c) against its cotangent form (pairwise coprime, m, n >= 2, same parity).
VerificationReport verify_bernoulli_cotangent(unsigned m, unsigned n, std::int64_t a, std::int64_t b,
                                              std::int64_t c, const ExactOptions& options = {});

/// sum_{k<a} B_m(k/a)((kb/a)) against m (-1)^{(m-1)/2}/(2^{m+1} a^m) sum cot(pi k/a) cot^{(m-1)}(pi kb/a).
VerificationReport verify_plane_partition(unsigned m, std::int64_t a, std::int64_t b,
                                          const ExactOptions& options = {});

// ---- Fourier expansions -----------------------------------------------------

/// B_m(n/p) = B_m/(-p)^m + m (i/2p)^m sum_{k=1}^{p-1} cot^{(m-1)}(pi k/p) zeta_p^{kn}, every n mod p.
VerificationReport verify_fourier_lemma(unsigned m, std::int64_t p);

/// ((n/p)) = (i/2p) sum_{k=1}^{p-1} cot(pi k/p) zeta_p^{kn}, every n mod p.
VerificationReport verify_sawtooth_fourier(std::int64_t p);

// ---- weight families ----------------------------------------------------

enum class MemberKind { Bernoulli, Cotangent };

// One period-1 function: the Bernoulli function B_m (the sawtooth for m = 1)
// of weight 1 - m, or cot^{(m)}(pi x) of weight m + 1, regularized at the
// integers.
struct FamilyMember {
  MemberKind kind = MemberKind::Bernoulli;
  unsigned order = 1;

  int weight() const;
  ExactValue operator()(const BigRational& x) const;
  std::string name() const;
};

struct WeightFamily {
  std::string name;
  std::vector<int> weights;
  std::function<ExactValue(std::size_t, const BigRational&)> evaluate;
  std::vector<FamilyMember> members;  // empty for hand-built families

  std::size_t dimension() const { return weights.size(); }
};

WeightFamily make_family(const std::vector<FamilyMember>& members);
WeightFamily bernoulli_family(const std::vector<unsigned>& orders);
WeightFamily cotangent_family(const std::vector<unsigned>& orders);

/// S(a; a_1..a_d) = sum_{k mod a} prod_j f_j(k a_j/a).
ExactValue product_sum(const WeightFamily& family, std::int64_t a, const std::vector<std::int64_t>& a_list);

/// Checks sum_{k mod a} f(x + k/a) = a^w f(ax), its twisted form
/// sum_{k mod a} f(x + kb/a) = (a,b)^{1-w} a^w f(ax/(a,b)), and
/// S(ab; a_list*b) = b S(a; a_list) for the product sum of copies of f.
VerificationReport verify_distribution_relation(const FamilyMember& f, std::int64_t a, const BigRational& x,
                                                std::int64_t b = 2, const std::vector<std::int64_t>& a_list = {1});

/// Runs the distribution check on each member over a small fixed battery;
/// throws WeightViolation on the first failure. Members without a kind
/// (hand-built families) are checked through `evaluate`.
void check_family_weights(const WeightFamily& family);

// ---- Petersson-Knopp ----------------------------------------------------

/// sum_{d|n} sum_{k mod d} s((n/d)b + ka, ad) = sigma(n) s(b, a).
VerificationReport verify_petersson_knopp_classical(std::int64_t n, std::int64_t a, std::int64_t b);

/// sum_{b|n} b^{m0+1-sum m-d} sum_r c(a0 b | (n/b)a_j + r_j a0; m; 0) = n sigma_{-sum m - 1}(n) c(a0 | a; m; 0).
/// Pole handling follows options.poles; see README for why Regularized is the default here.
VerificationReport verify_pk_cotangent(std::int64_t n, std::int64_t a0, const std::vector<std::int64_t>& a,
                                       unsigned m0, const std::vector<unsigned>& m, const ExactOptions& options);
VerificationReport verify_pk_cotangent(std::int64_t n, std::int64_t a0, const std::vector<std::int64_t>& a,
                                       unsigned m0, const std::vector<unsigned>& m);

/// sum_{b|n} b^{-sum w} sum_r S(ab; (n/b)a_j + r_j a) = n sigma_{d-1-sum w}(n) S(a; a_list).
VerificationReport verify_pk_generic(const WeightFamily& family, std::int64_t n, std::int64_t a,
                                     const std::vector<std::int64_t>& a_list);

/// sum_{b|n} b^{1-d} sum_r s(a0 b; (n/b)a_j + r_j a0) = sigma(n) s(a0; a).
VerificationReport verify_pk_zagier(std::int64_t n, const std::vector<std::int64_t>& a,
                                    const ExactOptions& options = {});

// ---- numeric --------------------------------------------------------------

/// sum_{k mod a} coth pi(ik/a + z) = a coth(pi a z), numerically.
VerificationReport coth_distribution_check(std::int64_t a, const Complex& z, const PrecisionContext& ctx = {});

// ---- Moebius inversion ------------------------------------------------------

/// Left and right of sum_{k <= ab, (k,b)=1} f(k) = sum_{t|b} mu(t) sum_{k <= ab/t} f(tk).
std::pair<BigInt, BigInt> moebius_inversion_sides(std::int64_t a, std::int64_t b,
                                                  const std::function<BigInt(std::int64_t)>& f);

}  // namespace cotsum
