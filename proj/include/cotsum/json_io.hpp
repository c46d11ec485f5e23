#pragma once

// JSON forms of values, reports and CLI output documents. Rationals are
// "p/q" strings, cyclotomic values {conductor, coeffs} with coefficient
// strings in the power basis, complex numbers {re, im, digits} with decimal
// strings. Keys are emitted sorted and no floating-point JSON numbers are
// used, so parse-then-serialize reproduces a document byte for byte.

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cotsum/bigfloat.hpp"
#include "cotsum/exact_value.hpp"
#include "cotsum/report.hpp"

namespace cotsum {

inline constexpr const char* kVersion = "1.0.0";

nlohmann::json to_json(const ExactValue& v);
ExactValue exact_value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Complex& z, int digits);
/// The digits field is honoured: the value is read with that many digits plus guard bits.
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

std::string to_string(VerificationMode mode);
VerificationMode parse_mode(std::string_view text);

using ResultItem = std::variant<ExactValue, Complex, VerificationReport>;

struct OutputDocument {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<ResultItem> items;
  bool is_list = false;  // a single item is written bare
  VerificationMode mode = VerificationMode::Exact;
  int digits = 60;  // used for complex items
  std::string version = kVersion;
};

nlohmann::json to_json(const OutputDocument& doc);
OutputDocument document_from_json(const nlohmann::json& j);

/// Two-space indented serialization with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace cotsum
