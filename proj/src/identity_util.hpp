#pragma once

#include <vector>

#include "json.hpp"

#include "cotsum/rational.hpp"

namespace cotsum::detail {

template <typename T>
nlohmann::json json_list(const std::vector<T>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

inline nlohmann::json json_rational(const BigRational& x) { return to_string(x); }

}  // namespace cotsum::detail
