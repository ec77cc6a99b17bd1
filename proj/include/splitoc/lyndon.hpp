#pragma once

// Lyndon words over the operator alphabet and their commutator bracketings.
//
// The degree-q Lyndon words index a basis of the degree-q part of the free
// Lie algebra; each word maps to a nested commutator through its right
// standard factorization, e.g. AABBB -> [A,[[[A,B],B],B]].

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "nc_poly.hpp"
#include "word.hpp"

namespace splitoc {

inline bool is_lyndon(const Word& w) {
  if (w.empty())
    throw invalid_input("is_lyndon: empty word");
  for (int i = 1; i < w.size(); ++i)
    if (!(w < w.suffix(i)))
      return false;
  return true;
}

/// All Lyndon words of exactly `degree` letters, in lexicographic order.
///
/// Duval's successor iteration visits every Lyndon word of length <= degree
/// in order; words of shorter length are skipped.
inline std::vector<Word> lyndon_words(const Alphabet& alphabet, int degree) {
  if (degree < 1 || degree > kMaxWordDegree)
    throw invalid_input("lyndon_words: degree must lie in [1, " + std::to_string(kMaxWordDegree) +
                        "], got " + std::to_string(degree));
  const int top = alphabet.size() - 1;
  std::vector<Word> out;
  std::vector<int> w{-1};
  w.reserve(degree);
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == degree) {
      Word word;
      for (int letter : w)
        word.push_back(letter);
      out.push_back(word);
    }
    const std::size_t period = w.size();
    while (static_cast<int>(w.size()) < degree)
      w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == top)
      w.pop_back();
  }
  return out;
}

/// Number of Lyndon words of length `degree` over `m` letters (Witt formula).
inline std::uint64_t lyndon_count(int m, int degree) {
  if (m < 2)
    throw invalid_input("lyndon_count: alphabet size must be >= 2");
  if (degree < 1 || degree > kMaxWordDegree)
    throw invalid_input("lyndon_count: degree out of range");
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0)
        continue;
      n /= p;
      if (n % p == 0)
        return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  auto power = [m](int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
      r *= m;
    return r;
  };
  std::int64_t sum = 0;
  for (int d = 1; d <= degree; ++d)
    if (degree % d == 0)
      sum += mobius(d) * power(degree / d);
  return static_cast<std::uint64_t>(sum / degree);
}

/// Split w = u.v where v is the longest proper suffix of w that is Lyndon.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2)
    throw invalid_input("standard_factorization: word '" + w.str() + "' has degree < 2");
  if (!is_lyndon(w))
    throw invalid_input("standard_factorization: '" + w.str() + "' is not a Lyndon word");
  for (int i = 1; i < w.size(); ++i) {
    Word tail = w.suffix(i);
    if (is_lyndon(tail))
      return {w.prefix(i), tail};
  }
  // The last letter is always a Lyndon suffix.
  return {w.prefix(w.size() - 1), w.suffix(w.size() - 1)};
}

namespace detail {

inline IntNCPoly bracket_expansion_rec(const Word& w, std::map<Word, IntNCPoly>& memo) {
  if (w.size() == 1)
    return IntNCPoly(w, BigInt(1));
  if (auto it = memo.find(w); it != memo.end())
    return it->second;
  auto [u, v] = standard_factorization(w);
  IntNCPoly left = bracket_expansion_rec(u, memo);
  IntNCPoly right = bracket_expansion_rec(v, memo);
  IntNCPoly out = left * right - right * left;
  memo.emplace(w, out);
  return out;
}

} // namespace detail

/// Expands the standard bracketing of a Lyndon word into a word polynomial.
inline IntNCPoly bracket_expansion(const Word& w) {
  if (!is_lyndon(w))
    throw invalid_input("bracket_expansion: '" + w.str() + "' is not a Lyndon word");
  std::map<Word, IntNCPoly> memo;
  return detail::bracket_expansion_rec(w, memo);
}

} // namespace splitoc
