#include "cotsum/json_io.hpp"

#include "cotsum/error.hpp"

namespace cotsum {

namespace {

Real parse_real(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  require(mpfr_set_str(r.get(), text.c_str(), 10, MPFR_RNDN) == 0, ErrorKind::InvalidArgument,
          "malformed decimal '" + text + "'");
  return r;
}

nlohmann::json value_json(const ReportValue& v, int digits) {
  if (const auto* e = std::get_if<ExactValue>(&v)) return to_json(*e);
  return to_json(std::get<Complex>(v), digits);
}

ReportValue value_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("re")) return complex_from_json(j);
  return exact_value_from_json(j);
}

ResultItem item_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("identity")) return report_from_json(j);
  if (j.is_object() && j.contains("re")) return complex_from_json(j);
  return exact_value_from_json(j);
}

}  // namespace

nlohmann::json to_json(const ExactValue& v) {
  if (v.is_rational()) return to_string(v.rational());
  const CycloElement u = v.cyclotomic();
  auto coeffs = nlohmann::json::array();
  for (const auto& c : u.coefficients()) coeffs.push_back(to_string(c));
  return {{"conductor", u.conductor()}, {"coeffs", coeffs}};
}

ExactValue exact_value_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  require(j.is_object() && j.contains("conductor") && j.contains("coeffs"), ErrorKind::InvalidArgument,
          "expected a rational string or {conductor, coeffs}");
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CycloElement::from_coefficients(j.at("conductor").get<std::uint64_t>(), coeffs);
}

nlohmann::json to_json(const Complex& z, int digits) {
  return {{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}, {"digits", digits}};
}

Complex complex_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("re") && j.contains("im") && j.contains("digits"), ErrorKind::InvalidArgument,
          "expected {re, im, digits}");
  const mpfr_prec_t bits = bits_for_digits(j.at("digits").get<int>(), 10);
  return Complex(parse_real(j.at("re").get<std::string>(), bits), parse_real(j.at("im").get<std::string>(), bits));
}

std::string to_string(VerificationMode mode) { return mode == VerificationMode::Exact ? "exact" : "numeric"; }

VerificationMode parse_mode(std::string_view text) {
  if (text == "exact") return VerificationMode::Exact;
  if (text == "numeric") return VerificationMode::Numeric;
  fail(ErrorKind::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"identity", r.identity},
                      {"parameters", r.parameters},
                      {"pass", r.pass},
                      {"mode", to_string(r.mode)}};
  const int digits = r.digits > 0 ? r.digits : 60;
  if (r.lhs) j["lhs"] = value_json(*r.lhs, digits);
  if (r.rhs) j["rhs"] = value_json(*r.rhs, digits);
  if (r.residual) j["residual"] = value_json(*r.residual, digits);
  if (r.mode == VerificationMode::Numeric) j["digits"] = r.digits;
  if (r.tolerance) j["tolerance"] = *r.tolerance;
  if (!r.checks.empty()) {
    auto checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.parameters = j.at("parameters");
  r.pass = j.at("pass").get<bool>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  if (j.contains("lhs")) r.lhs = value_from_json(j.at("lhs"));
  if (j.contains("rhs")) r.rhs = value_from_json(j.at("rhs"));
  if (j.contains("residual")) r.residual = value_from_json(j.at("residual"));
  if (j.contains("digits")) r.digits = j.at("digits").get<int>();
  if (j.contains("tolerance")) r.tolerance = j.at("tolerance").get<std::string>();
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) r.checks.push_back(report_from_json(c));
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

nlohmann::json to_json(const OutputDocument& doc) {
  auto item_json = [&doc](const ResultItem& item) -> nlohmann::json {
    if (const auto* e = std::get_if<ExactValue>(&item)) return to_json(*e);
    if (const auto* z = std::get_if<Complex>(&item)) return to_json(*z, doc.digits);
    return to_json(std::get<VerificationReport>(item));
  };
  nlohmann::json result;
  if (doc.is_list) {
    result = nlohmann::json::array();
    for (const auto& item : doc.items) result.push_back(item_json(item));
  } else {
    require(doc.items.size() == 1, ErrorKind::InvalidArgument, "a single-result document needs exactly one item");
    result = item_json(doc.items.front());
  }
  return {{"command", doc.command},
          {"inputs", doc.inputs},
          {"result", result},
          {"mode", to_string(doc.mode)},
          {"version", doc.version}};
}

OutputDocument document_from_json(const nlohmann::json& j) {
  OutputDocument doc;
  doc.command = j.at("command").get<std::string>();
  doc.inputs = j.at("inputs");
  doc.mode = parse_mode(j.at("mode").get<std::string>());
  doc.version = j.at("version").get<std::string>();
  const auto& result = j.at("result");
  auto note_digits = [&doc](const nlohmann::json& item) {
    if (item.is_object() && item.contains("re")) doc.digits = item.at("digits").get<int>();
  };
  if (result.is_array()) {
    doc.is_list = true;
    for (const auto& item : result) {
      note_digits(item);
      doc.items.push_back(item_from_json(item));
    }
  } else {
    note_digits(result);
    doc.items.push_back(item_from_json(result));
  }
  return doc;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace cotsum
