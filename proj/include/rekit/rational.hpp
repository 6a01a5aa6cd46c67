#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons. Plain overloads win overload resolution over both.
namespace boost {
#define REKIT_RATIONAL_EQ(T)                                                                              \
  inline bool operator==(const rational<std::int64_t>& a, T b) { return a.denominator() == 1 && a.numerator() == b; } \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
REKIT_RATIONAL_EQ(int)
REKIT_RATIONAL_EQ(long)
REKIT_RATIONAL_EQ(long long)
#undef REKIT_RATIONAL_EQ
}  // namespace boost

namespace rekit {

/// Exact rational used for costs, profits, budgets and weights.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2.75", "1e-3" or "7/3" exactly. Throws rekit::Error on junk.
Rational parse_rational(std::string_view text);

/// Converts a double through its shortest round-trip decimal text, so 3.1
/// becomes 31/10 rather than the nearest binary fraction.
Rational rational_from_double(double value);

/// Minimal decimal text for terminating fractions ("5.5", "16", "-0.25"),
/// "p/q" otherwise.
std::string to_string(const Rational& value);

/// True when the denominator has no prime factors other than 2 and 5.
bool is_terminating_decimal(const Rational& value);

double to_double(const Rational& value);

/// value / unit as an integer; throws when value is not a multiple of unit.
std::int64_t scale_to_units(const Rational& value, const Rational& unit);

/// floor(value / unit).
std::int64_t floor_units(const Rational& value, const Rational& unit);

}  // namespace rekit
