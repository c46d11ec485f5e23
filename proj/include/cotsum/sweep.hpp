#pragma once

// Randomized property sweeps: draw parameter tuples inside desk-scale bounds
// and run the matching verifier. The parameter sequence depends only on the
// seed (mt19937_64 with a portable bounded-integer draw).

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cotsum/bigfloat.hpp"
#include "cotsum/report.hpp"
#include "cotsum/sums.hpp"

namespace cotsum {

// Portable draws; std::uniform_int_distribution is implementation-defined.
class SweepRng {
 public:
  explicit SweepRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi] by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with 1 <= q <= max_den and 0 <= p < q.
  BigRational fraction(std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

struct SweepOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::int64_t max_a = 0;  // 0: the identity's default bound
  ExactOptions exact;
  PrecisionContext precision;
  std::size_t max_attempts_factor = 50;  // give up after count * factor draws
};

struct SweepResult {
  std::string identity;
  std::size_t rejected = 0;  // draws the verifier refused (precondition or cap)
  std::vector<VerificationReport> reports;

  std::size_t passed() const;
  bool all_pass() const { return passed() == reports.size(); }
};

std::vector<std::string> sweep_identities();

/// Default bound on the moduli for an identity.
std::int64_t default_max_a(std::string_view identity);

/// Throws InvalidArgument for an unknown identity.
SweepResult run_sweep(std::string_view identity, const SweepOptions& options);

/// The sweep as one aggregate report whose checks are the sampled cases.
VerificationReport sweep_report(const SweepResult& result, const SweepOptions& options);

}  // namespace cotsum
