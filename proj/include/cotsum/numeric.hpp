#pragma once

// High-precision complex evaluation of cot and coth at pi-scaled arguments.

#include "cotsum/bigfloat.hpp"

namespace cotsum {

/// Distance from w to the nearest integer (complex modulus).
Real distance_to_integer(const Complex& w);

/// cot(pi w). Throws NearPole when distance_to_integer(w) < ctx.pole_tolerance.
Complex cot_numeric(const Complex& w, const PrecisionContext& ctx);

/// coth(pi w) = i cot(i pi w). Throws NearPole when i w is near an integer.
Complex coth_numeric(const Complex& w, const PrecisionContext& ctx);

}  // namespace cotsum
