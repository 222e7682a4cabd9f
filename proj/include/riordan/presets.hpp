#pragma once

#include <string_view>

#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"

namespace riordan {

// The recurring example series, generated exactly at any truncation.
Series<Rational> ones_d(int trunc);        // 1/(1-z)
Series<Rational> geometric_h(int trunc);   // z/(1-z)
Series<Rational> catalan_d(int trunc);     // (1 - sqrt(1-4z)) / (2z)
Series<Rational> neg_z(int trunc);         // -z

RiordanArray<Rational> pascal(int trunc);         // (1/(1-z), z/(1-z))
RiordanArray<Rational> identity_array(int trunc); // (1, z)
RiordanArray<Rational> marked_involution(int trunc);  // M = (1, -z)

// Parses a series spec: a preset name (identity, pascal_d, pascal_h,
// geometric, catalan, neg_z) or comma-separated rationals like "1,1/2,-3"
// (zero-padded up to the truncation).
Series<Rational> parse_series_spec(std::string_view spec, int trunc);

}  // namespace riordan
