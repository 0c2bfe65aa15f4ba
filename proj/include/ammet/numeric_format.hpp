#pragma once

#include <string>
#include <string_view>

namespace ammet {

/// Rounds half away from zero (half-up for the positive values used here).
double round_to_decimals(double value, int decimals);

/// Fixed notation with exactly `decimals` digits after the point, C locale.
std::string format_fixed(double value, int decimals);

/// Fixed notation rounded to `decimals`, trailing zeros and a bare point
/// removed: 5.0 -> "5", 5.4945054945 -> "5.494505" for decimals = 6.
std::string format_trimmed(double value, int decimals);

/// Shortest representation that round-trips to the same double.
std::string format_shortest(double value);

/// Parses a whole string as a double. A single decimal comma is accepted in
/// place of the point ("0,182"). Throws UsageError on anything else.
double parse_decimal(std::string_view text);

}  // namespace ammet
