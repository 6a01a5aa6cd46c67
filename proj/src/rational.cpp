#include "rekit/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "rekit/error.hpp"

namespace rekit {

namespace {

__extension__ using Wide = __int128;

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::invalid_input, "malformed number '" + std::string(text) + "'");
}

std::int64_t narrow(Wide v, std::string_view text) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::invalid_input, "number out of range '" + std::string(text) + "'");
  }
  return static_cast<std::int64_t>(v);
}

Wide pow10(int e, std::string_view text) {
  if (e > 30) {
    throw Error(ErrorKind::invalid_input, "number out of range '" + std::string(text) + "'");
  }
  Wide r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Wide mantissa = 0;
  int frac_digits = 0;
  int digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) bad_number(text);
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') break;
    if (digits > 30) bad_number(text);
    any_digit = true;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa != 0) ++digits;
    if (seen_point) ++frac_digits;
  }
  if (!any_digit) bad_number(text);
  int exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    auto [ptr, ec] = std::from_chars(text.data() + pos + (pos < text.size() && text[pos] == '+' ? 1 : 0),
                                     text.data() + text.size(), exponent);
    if (ec != std::errc{}) bad_number(text);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) bad_number(text);
  int scale = exponent - frac_digits;
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  if (scale >= 0) {
    num *= pow10(scale, text);
  } else {
    den = pow10(-scale, text);
  }
  // reduce before narrowing so values like 1.50000 fit
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, text), narrow(den, text));
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_comparison: return "invalid-comparison";
    case ErrorKind::unsupported_estimate: return "unsupported-estimate";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::incomplete_catalog: return "incomplete-catalog";
    case ErrorKind::invalid_weights: return "invalid-weights";
    case ErrorKind::stale_action: return "stale-action";
    case ErrorKind::invalid_hotlink: return "invalid-hotlink";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_number(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    auto lhs = text.substr(0, slash);
    auto rhs = text.substr(slash + 1);
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), q);
    if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
        r2.ptr != rhs.data() + rhs.size() || q == 0) {
      bad_number(text);
    }
    return Rational(p, q);
  }
  return parse_decimal(text);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::invalid_input, "non-finite number");
  }
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) bad_number("?");
  return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

bool is_terminating_decimal(const Rational& value) {
  auto d = value.denominator();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string to_string(const Rational& value) {
  if (!is_terminating_decimal(value)) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
  }
  auto d = value.denominator();
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  int digits = std::max(twos, fives);
  if (digits > 18) return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Wide scaled = static_cast<Wide>(value.numerator()) * (scale / value.denominator());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Wide whole = scaled / scale;
  Wide frac = scaled % scale;
  std::string out = negative ? "-" : "";
  out += std::to_string(static_cast<std::int64_t>(whole));
  if (digits > 0) {
    std::string f = std::to_string(static_cast<std::int64_t>(frac));
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

std::int64_t scale_to_units(const Rational& value, const Rational& unit) {
  Rational q = value / unit;
  if (q.denominator() != 1) {
    throw Error(ErrorKind::invalid_input,
                "value " + to_string(value) + " is not a multiple of granularity " + to_string(unit));
  }
  return q.numerator();
}

std::int64_t floor_units(const Rational& value, const Rational& unit) {
  Rational q = value / unit;
  auto n = q.numerator();
  auto d = q.denominator();
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

}  // namespace rekit
