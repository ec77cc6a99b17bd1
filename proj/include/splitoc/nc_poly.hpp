#pragma once

#include <map>
#include <utility>

#include "coeff_poly.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace splitoc {

namespace detail {
inline bool is_zero_coeff(const BigInt& c) { return c == 0; }
inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const CoeffPoly& c) { return c.is_zero(); }
} // namespace detail

/// Sparse noncommutative polynomial: words over the operator alphabet with
/// coefficients from a commutative ring. Zero coefficients are never stored.
template <class Coeff>
class NCPolynomial {
public:
  using coefficient_type = Coeff;
  using TermMap = std::map<Word, Coeff>;

  NCPolynomial() = default;
  NCPolynomial(const Word& w, Coeff c) { add_term(w, std::move(c)); }

  static NCPolynomial one() { return NCPolynomial(Word{}, Coeff(1)); }
  static NCPolynomial letter(int index) { return NCPolynomial(Word::letter(index), Coeff(1)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient at `w`, zero when absent.
  Coeff coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add_term(const Word& w, Coeff c) {
    if (detail::is_zero_coeff(c))
      return;
    auto [it, inserted] = terms_.try_emplace(w, std::move(c));
    if (!inserted) {
      it->second += c;
      if (detail::is_zero_coeff(it->second))
        terms_.erase(it);
    }
  }

  NCPolynomial& operator+=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_)
      add_term(w, c);
    return *this;
  }

  NCPolynomial& operator-=(const NCPolynomial& rhs) {
    for (const auto& [w, c] : rhs.terms_)
      add_term(w, -c);
    return *this;
  }

  /// Scales every coefficient by `s` (from the left; the ring is commutative).
  NCPolynomial& operator*=(const Coeff& s) {
    NCPolynomial out;
    for (const auto& [w, c] : terms_)
      out.add_term(w, c * s);
    return *this = std::move(out);
  }

  NCPolynomial& operator*=(const NCPolynomial& rhs) { return *this = *this * rhs; }

  NCPolynomial operator-() const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_)
      out.terms_.emplace(w, -c);
    return out;
  }

  friend NCPolynomial operator+(NCPolynomial lhs, const NCPolynomial& rhs) { return lhs += rhs; }
  friend NCPolynomial operator-(NCPolynomial lhs, const NCPolynomial& rhs) { return lhs -= rhs; }
  friend NCPolynomial operator*(NCPolynomial lhs, const Coeff& s) { return lhs *= s; }
  friend NCPolynomial operator*(const Coeff& s, NCPolynomial rhs) { return rhs *= s; }

  /// Concatenates words, multiplies coefficients.
  friend NCPolynomial operator*(const NCPolynomial& lhs, const NCPolynomial& rhs) {
    NCPolynomial out;
    for (const auto& [wl, cl] : lhs.terms_)
      for (const auto& [wr, cr] : rhs.terms_)
        out.add_term(wl * wr, cl * cr);
    return out;
  }

  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

private:
  TermMap terms_;
};

/// Integer combinations of words, e.g. expanded commutators.
using IntNCPoly = NCPolynomial<BigInt>;
/// Words weighted by polynomials in the scheme unknowns.
using NCPoly = NCPolynomial<CoeffPoly>;

/// Applies `fn` coefficient-wise.
template <class To, class From, class Fn>
NCPolynomial<To> map_coefficients(const NCPolynomial<From>& p, Fn&& fn) {
  NCPolynomial<To> out;
  for (const auto& [w, c] : p.terms())
    out.add_term(w, fn(c));
  return out;
}

/// Power of a noncommutative polynomial; exponent 0 gives the unit.
template <class Coeff>
NCPolynomial<Coeff> pow(const NCPolynomial<Coeff>& base, int exponent) {
  auto out = NCPolynomial<Coeff>::one();
  for (int i = 0; i < exponent; ++i)
    out *= base;
  return out;
}

} // namespace splitoc
