#include "doctest.h"

#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
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

bool coprime3(long a, long b, long c) {
  return oracle::gcd(a, b) == 1 && oracle::gcd(b, c) == 1 && oracle::gcd(a, c) == 1;
}

// -[z^-1] of prod cot^{(m_j)}(pi a_j z)
BigRational phi_by_residue(const std::vector<long>& a, const std::vector<unsigned>& m) {
  const int top = static_cast<int>(m[0] + m[1] + m[2]) + 4;
  oracle::Laurent p = oracle::cot_laurent(m[0], a[0], top);
  p = oracle::multiply(p, oracle::cot_laurent(m[1], a[1], top), top);
  p = oracle::multiply(p, oracle::cot_laurent(m[2], a[2], top), 0);
  return -p.at(-1);
}

// (-1)^{d/2} [t^-1] prod cot(a_j t)
BigRational h_by_residue(const std::vector<std::int64_t>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  oracle::Laurent p = oracle::cot_laurent(0, a[0], d + 2);
  for (std::size_t j = 1; j < a.size(); ++j) p = oracle::multiply(p, oracle::cot_laurent(0, a[j], d + 2), d + 2);
  return (d / 2) % 2 ? BigRational(-p.at(-1)) : p.at(-1);
}

std::string lhs_text(const VerificationReport& r) { return std::get<ExactValue>(*r.lhs).to_string(); }
std::string rhs_text(const VerificationReport& r) { return std::get<ExactValue>(*r.rhs).to_string(); }

}  // namespace

TEST_CASE("Dedekind reciprocity") {
  const auto r = verify_dedekind_reciprocity(1, 3);
  CHECK(r.pass);
  CHECK(lhs_text(r) == "1/18");
  CHECK(verify_dedekind_reciprocity(1, 1).pass);
  CHECK(kind_of([] { verify_dedekind_reciprocity(2, 4); }) == ErrorKind::NotCoprime);
  for (long b = 1; b <= 30; ++b)
    for (long a = 1; a < b; ++a)
      if (oracle::gcd(a, b) == 1) CHECK(verify_dedekind_reciprocity(a, b).pass);
}

TEST_CASE("main reciprocity examples") {
  const std::vector<ShiftValue> z2{make_rational(1, 3), BigRational(0)};
  auto r = verify_main_reciprocity({3, 2}, {0, 0}, z2);
  CHECK(r.pass);
  CHECK(rhs_text(r) == "0");
  r = verify_main_reciprocity({3, 2, 5}, {0, 0, 0}, {make_rational(1, 3), BigRational(0), make_rational(1, 4)});
  CHECK(r.pass);
  CHECK(rhs_text(r) == "-1");
  CHECK(verify_main_reciprocity({3, 2, 5}, {1, 2, 0}, {make_rational(1, 3), BigRational(0), make_rational(1, 4)}).pass);
  CHECK(kind_of([] { verify_main_reciprocity({3, 2}, {0, 0}, {BigRational(0), BigRational(0)}); }) ==
        ErrorKind::SingularConfiguration);
  CHECK_FALSE(is_admissible({3, 2}, {BigRational(0), BigRational(0)}));
  CHECK(is_admissible({3, 2}, z2));
}

TEST_CASE("main reciprocity with complex shifts runs numerically") {
  const auto r = verify_main_reciprocity(
      {3, 2, 5}, {0, 1, 1}, {ShiftValue(make_rational(1, 3), make_rational(1, 5)), BigRational(0), make_rational(1, 4)});
  CHECK(r.pass);
  CHECK(r.mode == VerificationMode::Numeric);
  CHECK(r.tolerance.has_value());
}

TEST_CASE("phi closed form equals the residue of the cotangent product") {
  for (const auto& m : std::vector<std::vector<unsigned>>{
           {2, 0, 0}, {1, 1, 0}, {0, 1, 1}, {2, 2, 0}, {1, 1, 2}, {4, 0, 0}, {3, 1, 2}, {2, 2, 2}, {0, 0, 4}})
    for (const auto& a : std::vector<std::vector<long>>{{1, 1, 1}, {2, 3, 5}, {3, 4, 7}, {5, 2, 1}, {7, 8, 3}})
      CHECK_MESSAGE(phi_term(a[0], a[1], a[2], m[0], m[1], m[2]) == phi_by_residue(a, m),
                    a[0] << "," << a[1] << "," << a[2] << " m " << m[0] << m[1] << m[2]);
}

TEST_CASE("three-term reciprocity") {
  for (long a0 = 1; a0 <= 5; ++a0)
    for (long a1 = 1; a1 <= 5; ++a1)
      for (long a2 = 1; a2 <= 5; ++a2) {
        if (!coprime3(a0, a1, a2)) continue;
        for (const auto& m : std::vector<std::vector<unsigned>>{{2, 0, 0}, {1, 1, 0}, {0, 1, 3}, {2, 1, 1}})
          CHECK(verify_three_term_reciprocity(a0, a1, a2, m[0], m[1], m[2]).pass);
      }
  CHECK(kind_of([] { verify_three_term_reciprocity(1, 2, 3, 1, 0, 0); }) == ErrorKind::ParityError);
  CHECK(kind_of([] { verify_three_term_reciprocity(1, 2, 3, 0, 0, 0); }) == ErrorKind::AllZeroOrders);
  CHECK(kind_of([] { verify_three_term_reciprocity(2, 4, 3, 2, 0, 0); }) == ErrorKind::NotCoprime);
}

TEST_CASE("Dieter reciprocity") {
  const auto r = verify_dieter_reciprocity(1, 1, 1, make_rational(1, 2), 0, 0);
  CHECK(r.pass);
  CHECK(lhs_text(r) == "0");
  CHECK(verify_dieter_reciprocity(2, 3, 5, make_rational(1, 3), make_rational(1, 7), make_rational(2, 5)).pass);
  for (long a = 1; a <= 7; ++a)
    for (long b = 1; b <= 7; ++b)
      for (long c = 1; c <= 7; ++c) {
        if (!coprime3(a, b, c)) continue;
        try {
          CHECK(verify_dieter_reciprocity(a, b, c, make_rational(1, 3), make_rational(1, 4), make_rational(1, 6)).pass);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::SingularConfiguration);
        }
      }
}

TEST_CASE("main reciprocity with three moduli agrees with Dieter's law") {
  // main(a, b, c; 0; x, y, z) and Dieter(a, b, c; x, y, z) share their left side; the
  // shifts are admissible exactly when no delta correction is active
  std::size_t overlap = 0, delta = 0;
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c) {
        if (!coprime3(a, b, c)) continue;
        for (const auto& s : std::vector<std::vector<BigRational>>{{make_rational(1, 3), make_rational(1, 4), 0},
                                                                   {make_rational(1, 2), 0, 0},
                                                                   {make_rational(1, 5), make_rational(2, 5), make_rational(1, 2)}}) {
          const std::vector<ShiftValue> z{s[0], s[1], s[2]};
          VerificationReport dieter_r;
          try {
            dieter_r = verify_dieter_reciprocity(a, b, c, s[0], s[1], s[2]);
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SingularConfiguration);
            CHECK_FALSE(is_admissible({a, b, c}, z));
            continue;
          }
          CHECK(dieter_r.pass);
          if (is_admissible({a, b, c}, z)) {
            ++overlap;
            const auto main_r = verify_main_reciprocity({a, b, c}, {0, 0, 0}, z);
            CHECK(main_r.pass);
            CHECK(lhs_text(main_r) == lhs_text(dieter_r));
            CHECK(rhs_text(dieter_r) == "-1");
            CHECK(dieter_r.notes.empty());
          } else {
            ++delta;
            CHECK_FALSE(dieter_r.notes.empty());
          }
        }
      }
  CHECK(overlap > 20);
  CHECK(delta > 5);
}

TEST_CASE("Zagier reciprocity") {
  CHECK(zagier_h({1, 1, 1}) == 1);
  CHECK(zagier_h({3, 1, 1}) == make_rational(11, 9));
  auto r = verify_zagier_reciprocity({3, 1, 1});
  CHECK(r.pass);
  CHECK(lhs_text(r) == "-2/9");
  CHECK(rhs_text(r) == "-2/9");
  CHECK(verify_zagier_reciprocity({2, 3, 5, 7, 11}).pass);
  r = verify_zagier_reciprocity({5});
  CHECK(r.pass);
  CHECK(lhs_text(r) == "4/5");
  CHECK(kind_of([] { verify_zagier_reciprocity({2, 4, 1}); }) == ErrorKind::NotCoprime);
  CHECK(kind_of([] { verify_zagier_reciprocity({2, 3}); }) == ErrorKind::OddDimension);
}

TEST_CASE("h against the cotangent product") {
  for (const auto& a : std::vector<std::vector<std::int64_t>>{
           {1, 1, 1}, {3, 1, 1}, {2, 3, 5}, {7, 4, 9}, {1}, {2, 3, 5, 7, 11}, {1, 1, 1, 1, 1}, {3, 5, 7, 2, 11, 13, 1}})
    CHECK(zagier_h(a) == h_by_residue(a));
}

TEST_CASE("Bernoulli-cotangent form and the plane-partition sum") {
  CHECK(verify_bernoulli_cotangent(2, 2, 3, 1, 2).pass);
  CHECK(verify_bernoulli_cotangent(3, 5, 7, 2, 3).pass);
  CHECK(kind_of([] { verify_bernoulli_cotangent(2, 3, 3, 1, 2); }) == ErrorKind::ParityError);
  for (unsigned m = 1; m <= 6; ++m)
    for (long a = 1; a <= 9; ++a)
      for (long b = 1; b <= 6; ++b)
        if (oracle::gcd(a, b) == 1) CHECK(verify_plane_partition(m, a, b).pass);
}

TEST_CASE("discrete Fourier series") {
  CHECK(verify_fourier_lemma(2, 2).pass);
  CHECK(verify_fourier_lemma(3, 5).pass);
  CHECK(verify_fourier_lemma(4, 1).pass);
  for (std::int64_t p = 1; p <= 12; ++p) CHECK(verify_sawtooth_fourier(p).pass);
}
