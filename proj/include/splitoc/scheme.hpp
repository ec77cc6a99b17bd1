#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coeff_poly.hpp"
#include "error.hpp"
#include "word.hpp"

namespace splitoc {

/// Structural restriction placed on the stage coefficients.
enum class Ansatz {
  plain,
  symmetric_a1_zero,  // a_1 = 0, (a_2..a_s) and (b_1..b_s) palindromic
  symmetric_bs_zero,  // b_s = 0, (a_1..a_s) and (b_1..b_{s-1}) palindromic
  palindromic,        // (a_1, b_1, ..., a_s, b_s) palindromic
  fixed_subset,       // only the values in SchemeSpec::fixed
};

inline std::string_view ansatz_name(Ansatz a) {
  switch (a) {
  case Ansatz::plain: return "plain";
  case Ansatz::symmetric_a1_zero: return "sym-a";
  case Ansatz::symmetric_bs_zero: return "sym-b";
  case Ansatz::palindromic: return "palindromic";
  case Ansatz::fixed_subset: return "fixed";
  }
  return "plain";
}

inline Ansatz parse_ansatz(std::string_view name) {
  for (Ansatz a : {Ansatz::plain, Ansatz::symmetric_a1_zero, Ansatz::symmetric_bs_zero,
                   Ansatz::palindromic, Ansatz::fixed_subset})
    if (ansatz_name(a) == name)
      return a;
  throw invalid_input("unknown ansatz '" + std::string(name) + "'");
}

inline bool is_symmetric(Ansatz a) {
  return a == Ansatz::symmetric_a1_zero || a == Ansatz::symmetric_bs_zero;
}

/// Shape of a splitting scheme: s stages over m operators, each stage
/// exp(c_j h C) exp(b_j h B) exp(a_j h A), plus an optional ansatz.
/// `fixed` values are honoured under every ansatz, not only fixed_subset.
struct SchemeSpec {
  int stages = 1;
  int operators = 2;
  Ansatz ansatz = Ansatz::plain;
  Assignment fixed;

  Alphabet alphabet() const { return Alphabet(operators); }

  bool declares(Unknown u) const {
    return u.index >= 1 && u.index <= stages && static_cast<int>(u.family) < operators;
  }

  /// a[1..s], b[1..s] (, c[1..s]) in canonical order.
  std::vector<Unknown> unknowns() const {
    std::vector<Unknown> out;
    for (int f = 0; f < operators; ++f)
      for (int j = 1; j <= stages; ++j)
        out.push_back(Unknown{static_cast<Family>(f), j});
    return out;
  }

  void validate() const {
    if (stages < 1)
      throw invalid_input("stages must be >= 1");
    if (operators != 2 && operators != 3)
      throw invalid_input("operators must be 2 or 3");
    if ((is_symmetric(ansatz) || ansatz == Ansatz::palindromic) && operators != 2)
      throw invalid_input("ansatz '" + std::string(ansatz_name(ansatz)) + "' requires 2 operators");
    for (const auto& [u, v] : fixed)
      if (!declares(u))
        throw invalid_input("fixed value for undeclared unknown " + u.name());
  }

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

} // namespace splitoc
