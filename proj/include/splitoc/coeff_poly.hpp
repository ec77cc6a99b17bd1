#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace splitoc {

/// Coefficient families: a_j multiplies A, b_j multiplies B, c_j multiplies C.
enum class Family : std::uint8_t { a = 0, b = 1, c = 2 };

inline char family_symbol(Family f) noexcept { return static_cast<char>('a' + static_cast<int>(f)); }

/// Scheme unknown a[j], b[j] or c[j] with 1-based stage index.
struct Unknown {
  Family family = Family::a;
  int index = 1;

  std::string name() const {
    return std::string(1, family_symbol(family)) + "[" + std::to_string(index) + "]";
  }

  friend auto operator<=>(const Unknown&, const Unknown&) = default;
  friend bool operator==(const Unknown&, const Unknown&) = default;
};

/// Accepts "a[3]" as well as the shorthand "a3".
inline Unknown parse_unknown(std::string_view text) {
  auto fail = [&] { return invalid_input("malformed unknown '" + std::string(text) + "'"); };
  if (text.size() < 2 || text[0] < 'a' || text[0] > 'c')
    throw fail();
  std::string_view digits = text.substr(1);
  if (digits.front() == '[') {
    if (digits.back() != ']')
      throw fail();
    digits = digits.substr(1, digits.size() - 2);
  }
  if (digits.empty() || digits.size() > 6)
    throw fail();
  int index = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw fail();
    index = index * 10 + (ch - '0');
  }
  if (index < 1)
    throw fail();
  return Unknown{static_cast<Family>(text[0] - 'a'), index};
}

/// Power product of unknowns; factors sorted by unknown, exponents positive.
class CoeffMonomial {
public:
  using Factor = std::pair<Unknown, int>;

  CoeffMonomial() = default;

  explicit CoeffMonomial(Unknown u, int exponent = 1) {
    if (exponent > 0)
      factors_.emplace_back(u, exponent);
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_constant() const noexcept { return factors_.empty(); }

  int degree() const noexcept {
    int d = 0;
    for (const auto& [u, e] : factors_)
      d += e;
    return d;
  }

  int exponent(Unknown u) const noexcept {
    for (const auto& [v, e] : factors_)
      if (v == u)
        return e;
    return 0;
  }

  friend CoeffMonomial operator*(const CoeffMonomial& lhs, const CoeffMonomial& rhs) {
    CoeffMonomial out;
    out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
    auto i = lhs.factors_.begin();
    auto j = rhs.factors_.begin();
    while (i != lhs.factors_.end() && j != rhs.factors_.end()) {
      if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out.factors_.insert(out.factors_.end(), i, lhs.factors_.end());
    out.factors_.insert(out.factors_.end(), j, rhs.factors_.end());
    return out;
  }

  friend bool operator==(const CoeffMonomial&, const CoeffMonomial&) = default;

private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order over unknowns (a[1] > a[2] > ... > b[1] > ...).
/// `before(x, y)` is true when x is printed ahead of y: higher total degree
/// first, then the larger exponent of the earliest unknown where they differ.
struct CanonicalOrder {
  bool operator()(const CoeffMonomial& x, const CoeffMonomial& y) const noexcept {
    int dx = x.degree();
    int dy = y.degree();
    if (dx != dy)
      return dx > dy;
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    std::size_t i = 0;
    for (; i < fx.size() && i < fy.size(); ++i) {
      if (fx[i].first != fy[i].first)
        return fx[i].first < fy[i].first;
      if (fx[i].second != fy[i].second)
        return fx[i].second > fy[i].second;
    }
    return i < fx.size() && i == fy.size();
  }
};

/// Sparse polynomial with exact rational coefficients in the scheme unknowns.
class CoeffPoly {
public:
  using TermMap = std::map<CoeffMonomial, Rational, CanonicalOrder>;

  CoeffPoly() = default;
  CoeffPoly(int constant) : CoeffPoly(Rational(constant)) {}
  CoeffPoly(const BigInt& constant) : CoeffPoly(Rational(constant)) {}
  CoeffPoly(const Rational& constant) {
    if (constant != 0)
      terms_.emplace(CoeffMonomial{}, constant);
  }
  CoeffPoly(const CoeffMonomial& m, const Rational& coeff) {
    if (coeff != 0)
      terms_.emplace(m, coeff);
  }

  static CoeffPoly variable(Unknown u) { return CoeffPoly(CoeffMonomial(u), Rational(1)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
  }

  Rational constant_term() const {
    auto it = terms_.find(CoeffMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  std::set<Unknown> unknowns() const {
    std::set<Unknown> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [u, e] : m.factors())
        out.insert(u);
    return out;
  }

  void add_term(const CoeffMonomial& m, const Rational& coeff) {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  CoeffPoly& operator+=(const CoeffPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_)
      add_term(m, c);
    return *this;
  }

  CoeffPoly& operator-=(const CoeffPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_)
      add_term(m, -c);
    return *this;
  }

  CoeffPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_)
      c *= s;
    return *this;
  }

  CoeffPoly& operator*=(const CoeffPoly& rhs) { return *this = *this * rhs; }

  CoeffPoly operator-() const {
    CoeffPoly out = *this;
    for (auto& [m, c] : out.terms_)
      c = -c;
    return out;
  }

  friend CoeffPoly operator+(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs += rhs; }
  friend CoeffPoly operator-(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs -= rhs; }
  friend CoeffPoly operator*(CoeffPoly lhs, const Rational& s) { return lhs *= s; }
  friend CoeffPoly operator*(const Rational& s, CoeffPoly rhs) { return rhs *= s; }

  friend CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs) {
    CoeffPoly out;
    for (const auto& [ml, cl] : lhs.terms_)
      for (const auto& [mr, cr] : rhs.terms_)
        out.add_term(ml * mr, cl * cr);
    return out;
  }

  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

private:
  TermMap terms_;
};

using Assignment = std::map<Unknown, Rational>;

inline Rational pow(const Rational& base, int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i)
    r *= base;
  return r;
}

/// Exact value of `p` under `values`; every unknown of `p` must be bound.
inline Rational evaluate(const CoeffPoly& p, const Assignment& values) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [u, e] : m.factors()) {
      auto it = values.find(u);
      if (it == values.end())
        throw unbound_variable(u.name());
      term *= pow(it->second, e);
    }
    total += term;
  }
  return total;
}

/// Replaces each mapped unknown by its image; unmapped unknowns are kept.
inline CoeffPoly substitute(const CoeffPoly& p, const std::map<Unknown, CoeffPoly>& images) {
  if (images.empty())
    return p;
  CoeffPoly out;
  for (const auto& [m, c] : p.terms()) {
    CoeffPoly term(c);
    CoeffMonomial kept;
    for (const auto& [u, e] : m.factors()) {
      auto it = images.find(u);
      if (it == images.end()) {
        kept = kept * CoeffMonomial(u, e);
        continue;
      }
      for (int k = 0; k < e; ++k)
        term *= it->second;
    }
    out += term * CoeffPoly(kept, Rational(1));
  }
  return out;
}

} // namespace splitoc
