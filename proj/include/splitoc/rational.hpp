#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace splitoc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p" or "p/q"; denominator omitted when it is 1.
inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1)
    return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// The exact binary value of a finite double.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x))
    throw invalid_input("non-finite value cannot be converted to a rational");
  if (x == 0.0)
    return Rational(0);
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  constexpr int digits = std::numeric_limits<double>::digits;
  auto scaled = static_cast<long long>(std::ldexp(mantissa, digits));
  exponent -= digits;
  Rational r(scaled);
  BigInt power = BigInt(1) << std::abs(exponent);
  return exponent >= 0 ? Rational(r * power) : Rational(r / power);
}

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw invalid_input("malformed rational '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw invalid_input("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw invalid_input("malformed rational '" + std::string(whole) + "'");
  BigInt v(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-v) : v;
}

} // namespace detail

/// Parses "p", "-p" or "p/q" with integer p, q (q nonzero).
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(detail::parse_integer(text, text));
  BigInt num = detail::parse_integer(text.substr(0, slash), text);
  BigInt den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0)
    throw invalid_input("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

} // namespace splitoc
