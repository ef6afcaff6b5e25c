#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace pcrank {

/// Exact rational scalar used for every rating, result and solver entry.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal with an optional exponent
/// ("0.5", "-1.25", "1e-6"). Returns nullopt on anything else; never goes
/// through a floating-point value.
std::optional<Rational> parse_rational(std::string_view text);

/// Lowest-terms rendering with the sign on the numerator: "3/8", "-1", "0".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace pcrank
