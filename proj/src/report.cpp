#include "cotsum/report.hpp"

namespace cotsum {

VerificationReport exact_report(std::string identity, nlohmann::json parameters, const ExactValue& lhs,
                                const ExactValue& rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  ExactValue diff = lhs - rhs;
  r.pass = diff.is_zero();
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::move(diff);
  r.mode = VerificationMode::Exact;
  return r;
}

VerificationReport numeric_report(std::string identity, nlohmann::json parameters, const Complex& lhs,
                                  const Complex& rhs, const Real& tolerance, int digits) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  Complex diff = lhs - rhs;
  r.pass = abs(diff) < tolerance;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::move(diff);
  r.mode = VerificationMode::Numeric;
  r.digits = digits;
  r.tolerance = tolerance.to_string(3);
  return r;
}

VerificationReport aggregate_report(std::string identity, nlohmann::json parameters,
                                    std::vector<VerificationReport> checks) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  r.pass = true;
  for (const auto& c : checks) {
    r.pass = r.pass && c.pass;
    if (c.mode == VerificationMode::Numeric) {
      r.mode = VerificationMode::Numeric;
      r.digits = c.digits;
      r.tolerance = c.tolerance;
    }
  }
  r.checks = std::move(checks);
  return r;
}

}  // namespace cotsum
