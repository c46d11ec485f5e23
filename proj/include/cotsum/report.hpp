#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cotsum/bigfloat.hpp"
#include "cotsum/exact_value.hpp"

namespace cotsum {

enum class VerificationMode { Exact, Numeric };

using ReportValue = std::variant<ExactValue, Complex>;

// Outcome of checking one identity instance. In exact mode pass means the
// residual is exactly zero; in numeric mode it means |residual| < tolerance.
// Identities made of several equations carry one sub-report per equation in
// `checks` and pass when all of them do.
struct VerificationReport {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<ReportValue> lhs;
  std::optional<ReportValue> rhs;
  std::optional<ReportValue> residual;
  bool pass = false;
  VerificationMode mode = VerificationMode::Exact;
  int digits = 0;                        // numeric mode only
  std::optional<std::string> tolerance;  // numeric mode only
  std::vector<VerificationReport> checks;
  std::vector<std::string> notes;
};

VerificationReport exact_report(std::string identity, nlohmann::json parameters, const ExactValue& lhs,
                                const ExactValue& rhs);

VerificationReport numeric_report(std::string identity, nlohmann::json parameters, const Complex& lhs,
                                  const Complex& rhs, const Real& tolerance, int digits);

/// Passes iff every check passes; an empty list passes.
VerificationReport aggregate_report(std::string identity, nlohmann::json parameters,
                                    std::vector<VerificationReport> checks);

}  // namespace cotsum
