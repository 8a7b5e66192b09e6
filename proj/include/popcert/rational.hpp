#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "popcert/errors.hpp"

namespace popcert {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always kept reduced with a positive
/// denominator. Every quantity in the library is carried as a Rational unless
/// a float path is explicitly requested.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

/// Build a rational from a possibly negative denominator; rejects zero.
inline Rational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw ParseError("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  return Rational(numerator, denominator);
}

namespace detail {

inline BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  bool negative = text[0] == '-';
  std::string_view digits = (text[0] == '+' || text[0] == '-') ? text.substr(1) : text;
  if (digits.empty()) throw ParseError("sign without digits");
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw ParseError("invalid character in integer literal: '" + std::string(text) + "'");
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

}  // namespace detail

/// Parse "p/q" or a bare integer string. Any denominator sign is normalized.
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  BigInt num = detail::parse_integer(detail::trim(text.substr(0, slash)));
  BigInt den = detail::parse_integer(detail::trim(text.substr(slash + 1)));
  return make_rational(num, den);
}

/// Lowest-terms rendering: integers print without the "/1" suffix.
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Decimal approximation with the requested number of fractional digits,
/// rounded half away from zero. For human-facing output only.
inline std::string decimal_string(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  BigInt twice = numerator(q) * scale * 2;
  BigInt den = denominator(q);
  BigInt rounded = (twice >= 0 ? BigInt(twice + den) : BigInt(twice - den)) / (2 * den);
  bool negative = rounded < 0;
  std::string body = BigInt(abs(rounded)).str();
  if (digits == 0) return (negative ? "-" : "") + body;
  if (body.size() <= static_cast<std::size_t>(digits))
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + body;
}

}  // namespace popcert
