#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond the GMP number types.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

inline Q frac(Z num, Z den) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

// Akiyama-Tanigawa gives B_1 = +1/2; flipped to the B_1 = -1/2 convention.
inline Q bernoulli(unsigned n) {
  std::vector<Q> row(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    row[m] = frac(1, m + 1);
    for (unsigned j = m; j >= 1; --j) row[j - 1] = Q(j) * (row[j - 1] - row[j]);
  }
  return n == 1 ? Q(-row[0]) : row[0];
}

inline Q sawtooth(const Q& x) {
  Z fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x == Q(fl)) return 0;
  return x - Q(fl) - Q(1, 2);
}

// sum_{k=1}^{b-1} ((k/b)) ((ka/b))
inline Q dedekind(long a, long b) {
  Q s = 0;
  for (long k = 1; k < b; ++k) s += sawtooth(frac(k, b)) * sawtooth(frac(Z(k) * a, b));
  return s;
}

// Laurent data of cot^{(m)}(pi a z) at 0; coefficient e carries pi^e implicitly.
struct Laurent {
  std::map<int, Q> c;
  Q at(int e) const {
    auto it = c.find(e);
    return it == c.end() ? Q(0) : it->second;
  }
};

// cot x = sum_k (-1)^k 2^{2k} B_{2k} x^{2k-1}/(2k)!, then d/dx = (1/(pi a)) d/dz.
inline Laurent cot_laurent(unsigned m, long a, int max_exp) {
  Laurent l;
  Z fact = 1;
  for (int k = 0; 2 * k - 1 <= max_exp + static_cast<int>(m); ++k) {
    if (k > 0) fact *= Z(2 * k - 1) * Z(2 * k);
    Z pow2, apow;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * k);
    Q coeff = Q(pow2) * bernoulli(2 * k) / Q(fact);
    if (k % 2) coeff = -coeff;
    // a^{2k-1}
    Q ap = 1;
    for (int i = 0; i < 2 * k - 1; ++i) ap *= a;
    if (k == 0) ap = Q(1, a);
    l.c[2 * k - 1] = coeff * ap;
  }
  for (unsigned d = 0; d < m; ++d) {
    Laurent next;
    for (const auto& [e, v] : l.c)
      if (e != 0) next.c[e - 1] = v * e / Q(a);
    l = next;
  }
  return l;
}

inline Laurent multiply(const Laurent& x, const Laurent& y, int max_exp) {
  Laurent r;
  for (const auto& [e1, v1] : x.c)
    for (const auto& [e2, v2] : y.c)
      if (e1 + e2 <= max_exp) r.c[e1 + e2] += v1 * v2;
  return r;
}

inline double cot_pi(double t) { return 1.0 / std::tan(M_PI * t); }

inline std::complex<double> cot_pi(std::complex<double> w) {
  const std::complex<double> x = M_PI * w;
  return std::cos(x) / std::sin(x);
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace oracle
