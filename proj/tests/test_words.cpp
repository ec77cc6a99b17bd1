#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace splitoc;

namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words)
    out.push_back(w.str());
  return out;
}

Word W(const char* s) { return Word::from_string(s); }

} // namespace

TEST(Word, OrderIsLexicographicWithPrefixFirst) {
  std::vector<std::string> all;
  for (int q = 1; q <= 4; ++q)
    for (const auto& w : oracle::all_words(3, q))
      all.push_back(w);
  for (const auto& x : all)
    for (const auto& y : all)
      ASSERT_EQ(W(x.c_str()) < W(y.c_str()), x < y) << x << " vs " << y;
}

TEST(Word, ConcatenationPrefixSuffix) {
  Word w = W("ABCAB");
  EXPECT_EQ((W("AB") * W("CAB")).str(), "ABCAB");
  EXPECT_EQ(w.prefix(2).str(), "AB");
  EXPECT_EQ(w.suffix(2).str(), "CAB");
  EXPECT_EQ(w.rotate(1).str(), "BCABA");
  EXPECT_EQ((Word{} * w), w);
  EXPECT_EQ(w[2], 2);
}

TEST(Word, RejectsBadLettersAndOverlongWords) {
  EXPECT_THROW(W("ABD"), invalid_input);
  std::string longest(kMaxWordDegree, 'A');
  Word w = W(longest.c_str());
  EXPECT_EQ(w.size(), kMaxWordDegree);
  EXPECT_THROW(w * W("B"), invalid_input);
  EXPECT_EQ((w.prefix(30) * W("B")).str(), std::string(30, 'A') + "B");
}

TEST(IsLyndon, Examples) {
  EXPECT_TRUE(is_lyndon(W("AABAB")));
  EXPECT_TRUE(is_lyndon(W("A")));
  EXPECT_FALSE(is_lyndon(W("BA")));
  EXPECT_FALSE(is_lyndon(W("ABAB")));
  EXPECT_THROW(is_lyndon(Word{}), invalid_input);
}

TEST(IsLyndon, AgreesWithRotationCharacterisation) {
  for (int m = 2; m <= 3; ++m)
    for (int q = 1; q <= 6; ++q)
      for (const auto& w : oracle::all_words(m, q))
        ASSERT_EQ(is_lyndon(W(w.c_str())), oracle::is_lyndon_by_rotation(w)) << w;
}

TEST(LyndonWords, TableRows) {
  Alphabet ab(2);
  EXPECT_EQ(strings(lyndon_words(ab, 1)), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(strings(lyndon_words(ab, 2)), (std::vector<std::string>{"AB"}));
  EXPECT_EQ(strings(lyndon_words(ab, 4)), (std::vector<std::string>{"AAAB", "AABB", "ABBB"}));
  EXPECT_EQ(strings(lyndon_words(Alphabet(3), 1)), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_THROW(lyndon_words(ab, 0), invalid_input);
}

TEST(LyndonWords, MatchEnumerationAndCount) {
  for (int m = 2; m <= 3; ++m) {
    for (int q = 1; q <= 8; ++q) {
      auto words = lyndon_words(Alphabet(m), q);
      auto expected = oracle::lyndon_by_enumeration(m, q);
      ASSERT_EQ(strings(words), expected) << "m=" << m << " q=" << q;
      ASSERT_EQ(lyndon_count(m, q), expected.size()) << "m=" << m << " q=" << q;
    }
  }
}

TEST(LyndonWords, GeneratedWordsAreLyndonAndRotationsAreNot) {
  for (int q = 1; q <= 9; ++q) {
    for (const auto& w : lyndon_words(Alphabet(2), q)) {
      ASSERT_TRUE(is_lyndon(w));
      for (int r = 1; r < q; ++r)
        ASSERT_FALSE(is_lyndon(w.rotate(r))) << w.str() << " rotated by " << r;
    }
  }
}

TEST(LyndonCount, Examples) {
  EXPECT_EQ(lyndon_count(2, 10), 99u);
  EXPECT_EQ(lyndon_count(2, 6), 9u);
  EXPECT_EQ(lyndon_count(3, 3), 8u);
  EXPECT_EQ(lyndon_count(3, 3), oracle::lyndon_by_enumeration(3, 3).size());
  EXPECT_THROW(lyndon_count(1, 3), invalid_input);
  EXPECT_THROW(lyndon_count(2, 0), invalid_input);
}

TEST(StandardFactorization, Examples) {
  auto check = [](const char* w, const char* u, const char* v) {
    auto [left, right] = standard_factorization(W(w));
    EXPECT_EQ(left.str(), u) << w;
    EXPECT_EQ(right.str(), v) << w;
  };
  check("AABBB", "A", "ABBB");
  check("AB", "A", "B");
  check("AAB", "A", "AB");
  check("ABB", "AB", "B");
  check("AABAB", "AAB", "AB");
  EXPECT_THROW(standard_factorization(W("A")), invalid_input);
  EXPECT_THROW(standard_factorization(W("BA")), invalid_input);
}

TEST(StandardFactorization, FactorsAreLyndonWithLongestSuffix) {
  for (int q = 2; q <= 8; ++q) {
    for (const auto& w : lyndon_words(Alphabet(3), q)) {
      auto [u, v] = standard_factorization(w);
      ASSERT_EQ(u * v, w);
      ASSERT_TRUE(is_lyndon(u));
      ASSERT_TRUE(is_lyndon(v));
      for (int i = 1; i < u.size(); ++i)
        ASSERT_FALSE(is_lyndon(w.suffix(i))) << w.str();
    }
  }
}

TEST(BracketExpansion, Examples) {
  EXPECT_EQ(to_string(bracket_expansion(W("A"))), "A");
  EXPECT_EQ(to_string(bracket_expansion(W("AB"))), "AB - BA");
  IntNCPoly expected;
  expected.add_term(W("AABBB"), 1);
  expected.add_term(W("ABABB"), -3);
  expected.add_term(W("ABBAB"), 3);
  expected.add_term(W("ABBBA"), -2);
  expected.add_term(W("BABBA"), 3);
  expected.add_term(W("BBABA"), -3);
  expected.add_term(W("BBBAA"), 1);
  EXPECT_EQ(bracket_expansion(W("AABBB")), expected);
  EXPECT_THROW(bracket_expansion(W("BA")), invalid_input);
}

TEST(BracketExpansion, TriangularAndHomogeneous) {
  for (int m = 2; m <= 3; ++m) {
    for (int q = 1; q <= (m == 2 ? 8 : 5); ++q) {
      for (const auto& w : lyndon_words(Alphabet(m), q)) {
        IntNCPoly p = bracket_expansion(w);
        ASSERT_EQ(p.coeff(w), 1) << w.str();
        for (const auto& [word, c] : p.terms()) {
          ASSERT_EQ(word.size(), q);
          ASSERT_GE(word, w) << w.str();
        }
      }
    }
  }
}

TEST(BracketExpansion, VanishesUnderCommutingSubstitution) {
  for (int q = 2; q <= 8; ++q) {
    for (const auto& w : lyndon_words(Alphabet(2), q)) {
      BigInt sum = 0;
      const IntNCPoly p = bracket_expansion(w);
      for (const auto& [word, c] : p.terms())
        sum += c;
      ASSERT_EQ(sum, 0) << w.str();
    }
  }
}
