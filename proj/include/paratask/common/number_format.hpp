#pragma once

#include <string>
#include <string_view>

namespace paratask {

// Shortest decimal text that parses back to the identical double.
std::string format_roundtrip(double value);

// Fixed notation with the given number of decimals.
std::string format_fixed(double value, int decimals);

// Strict full-string parse; throws ParseError naming `what` on failure.
double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

}  // namespace paratask
