#pragma once

// Canonical text form shared by golden files, CLI output and JSON payloads.
//
//   poly   := "0" | term { ("+" | "-") term }
//   term   := ["-"] coeff | ["-"] [coeff "*"] factor { "*" factor }
//   coeff  := digits [ "/" digits ]
//   factor := ("a" | "b" | "c") "[" digits "]" [ "^" digits ]
//
// Terms appear in CanonicalOrder, factors sorted by (family, index), unit
// coefficients are omitted. The parser also accepts whitespace, a leading
// "+", repeated numeric factors and unsorted input.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "coeff_poly.hpp"
#include "nc_poly.hpp"

namespace splitoc {

inline std::string to_string(const CoeffMonomial& m) {
  std::string out;
  for (const auto& [u, e] : m.factors()) {
    if (!out.empty())
      out += '*';
    out += u.name();
    if (e != 1)
      out += '^' + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const CoeffPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (negative)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (m.is_constant()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1)
        out += to_string(magnitude) + "*";
      out += to_string(m);
    }
  }
  return out;
}

/// "AABBB - 3*ABABB + ..." with terms sorted by word.
inline std::string to_string(const IntNCPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    bool negative = c < 0;
    BigInt magnitude = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (magnitude != 1)
      out += magnitude.str() + "*";
    out += w.empty() ? "1" : w.str();
  }
  return out;
}

/// "(a[1]+a[2]-1)*A + (b[1]+b[2]-1)*B" with terms sorted by word.
inline std::string to_string(const NCPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(c) + ")*" + (w.empty() ? std::string("1") : w.str());
  }
  return out;
}

namespace detail {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  CoeffPoly parse() {
    skip_space();
    if (at_end())
      fail("empty polynomial");
    CoeffPoly out;
    bool first = true;
    while (!at_end()) {
      Rational sign(1);
      char ch = peek();
      if (ch == '+' || ch == '-') {
        sign = ch == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += parse_term() * sign;
      skip_space();
    }
    return out;
  }

private:
  CoeffPoly parse_term() {
    Rational coeff(1);
    CoeffMonomial mono;
    while (true) {
      skip_space();
      if (at_end())
        fail("truncated term");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= parse_number();
      } else if (ch >= 'a' && ch <= 'c') {
        Unknown u = parse_unknown_token();
        int exponent = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          exponent = static_cast<int>(parse_digits());
          if (exponent < 1)
            fail("exponent must be positive");
        }
        mono = mono * CoeffMonomial(u, exponent);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_space();
      if (at_end() || peek() != '*')
        break;
      ++pos_;
    }
    return CoeffPoly(mono, coeff);
  }

  Rational parse_number() {
    BigInt num = parse_big();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      BigInt den = parse_big();
      if (den == 0)
        fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  BigInt parse_big() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  long parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_ || pos_ - start > 6)
      fail("expected small integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Unknown parse_unknown_token() {
    auto family = static_cast<Family>(peek() - 'a');
    ++pos_;
    skip_space();
    if (at_end() || peek() != '[')
      fail("expected '['");
    ++pos_;
    skip_space();
    long index = parse_digits();
    skip_space();
    if (at_end() || peek() != ']')
      fail("expected ']'");
    ++pos_;
    if (index < 1)
      fail("stage index must be positive");
    return Unknown{family, static_cast<int>(index)};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw invalid_input("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline CoeffPoly parse_coeff_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

} // namespace splitoc
