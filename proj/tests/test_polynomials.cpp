#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace splitoc;

namespace {

CoeffPoly var(char family, int index) {
  return CoeffPoly::variable(Unknown{static_cast<Family>(family - 'a'), index});
}
CoeffPoly P(const char* text) { return parse_coeff_poly(text); }

// Small random polynomial: up to 4 terms, degree <= 3, over a1..a2, b1..b2.
CoeffPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), coeff(-5, 5), den(1, 3), exp(0, 2), idx(1, 2), fam(0, 1);
  CoeffPoly out;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    CoeffMonomial m;
    for (int f = 0; f < 2; ++f)
      m = m * CoeffMonomial(Unknown{static_cast<Family>(fam(rng)), idx(rng)}, exp(rng));
    out.add_term(m, Rational(coeff(rng), den(rng)));
  }
  return out;
}

NCPoly random_ncpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 3), len(0, 3), letter(0, 1);
  NCPoly out;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i)
      w.push_back(letter(rng));
    out.add_term(w, random_poly(rng));
  }
  return out;
}

Assignment random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  Assignment out;
  for (int f = 0; f < 2; ++f)
    for (int j = 1; j <= 2; ++j)
      out[Unknown{static_cast<Family>(f), j}] = Rational(num(rng), den(rng));
  return out;
}

} // namespace

TEST(CoeffPoly, ArithmeticExamples) {
  EXPECT_EQ(to_string(var('a', 1) + var('a', 2) + CoeffPoly(-1)), "a[1]+a[2]-1");
  EXPECT_EQ(to_string(CoeffPoly(2) * var('a', 2) * var('b', 1)), "2*a[2]*b[1]");
  EXPECT_TRUE((P("a[1]+b[2]^2") * CoeffPoly(0)).is_zero());
  EXPECT_TRUE((P("a[1]+b[2]^2") * Rational(0)).is_zero());
  EXPECT_EQ(P("a[1]") - P("a[1]"), CoeffPoly());
  EXPECT_EQ((var('a', 1) + var('b', 1)) * (var('a', 1) - var('b', 1)), P("a[1]^2-b[1]^2"));
}

TEST(CoeffPoly, Evaluation) {
  Assignment strang{{Unknown{Family::a, 2}, Rational(1, 2)}, {Unknown{Family::b, 1}, Rational(1)}};
  EXPECT_EQ(evaluate(P("2*a[2]*b[1]-1"), strang), 0);
  EXPECT_EQ(evaluate(P("3*a[2]^2*b[1]-1"), strang), Rational(-1, 4));
  EXPECT_EQ(evaluate(CoeffPoly(-1), {}), -1);
  EXPECT_THROW(evaluate(P("a[3]"), strang), unbound_variable);
}

TEST(CoeffPoly, CanonicalOrderIsGradedLex) {
  EXPECT_EQ(to_string(P("b[1] - 1 + a[2]*a[3]*b[1] + 3*a[2]^2*b[1] + a[1]")),
            "3*a[2]^2*b[1]+a[2]*a[3]*b[1]+a[1]+b[1]-1");
  EXPECT_EQ(P("a[1]*b[2]").degree(), 2);
  EXPECT_EQ(to_string(P("3/6*a[1]")), "1/2*a[1]");
}

TEST(CoeffPoly, ParserRejectsMalformedInput) {
  EXPECT_THROW(P(""), invalid_input);
  EXPECT_THROW(P("a[1]+"), invalid_input);
  EXPECT_THROW(P("x[1]"), invalid_input);
  EXPECT_THROW(P("a1"), invalid_input);
  EXPECT_THROW(P("a[0]"), invalid_input);
  EXPECT_THROW(P("1/0*a[1]"), invalid_input);
  EXPECT_THROW(P("a[1] b[1]"), invalid_input);
  EXPECT_EQ(P("  + 2 * a[1] ^ 2\n - 1"), P("2*a[1]^2-1"));
}

TEST(CoeffPoly, RingLawsProperty) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    CoeffPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * CoeffPoly(1), x);
    ASSERT_EQ(x + CoeffPoly(), x);
    ASSERT_TRUE((x - x).is_zero());
  }
}

TEST(CoeffPoly, EvaluationIsRingHomomorphismProperty) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    CoeffPoly x = random_poly(rng), y = random_poly(rng);
    Assignment at = random_point(rng);
    ASSERT_EQ(evaluate(x * y, at), evaluate(x, at) * evaluate(y, at));
    ASSERT_EQ(evaluate(x + y, at), evaluate(x, at) + evaluate(y, at));
  }
}

TEST(CoeffPoly, TextRoundTripProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    CoeffPoly x = random_poly(rng);
    const std::string text = to_string(x);
    ASSERT_EQ(parse_coeff_poly(text), x) << text;
    ASSERT_EQ(to_string(parse_coeff_poly(text)), text);
  }
}

TEST(CoeffPoly, SubstitutionMatchesEvaluation) {
  CoeffPoly p = P("3*a[1]^2*b[2]-a[2]*b[1]+1/2");
  std::map<Unknown, CoeffPoly> images{{Unknown{Family::a, 1}, P("b[1]+1")}, {Unknown{Family::b, 2}, CoeffPoly(2)}};
  EXPECT_EQ(substitute(p, images), P("6*b[1]^2+12*b[1]+6-a[2]*b[1]+1/2"));
}

TEST(NCPoly, ProductsAreNoncommutative) {
  const NCPoly a = NCPoly::letter(0), b = NCPoly::letter(1);
  EXPECT_EQ(a * b, NCPoly(Word::from_string("AB"), CoeffPoly(1)));
  EXPECT_EQ(b * a, NCPoly(Word::from_string("BA"), CoeffPoly(1)));
  EXPECT_NE(a * b, b * a);
  const NCPoly lhs = b * var('b', 1);
  const NCPoly rhs = a * var('a', 1);
  EXPECT_EQ(lhs * rhs, NCPoly(Word::from_string("BA"), P("a[1]*b[1]")));
  NCPoly p = a * var('a', 2) + b;
  EXPECT_TRUE((p + (-p)).is_zero());
}

TEST(NCPoly, CoefficientLookup) {
  IntNCPoly comm = bracket_expansion(Word::from_string("AB"));
  EXPECT_EQ(comm.coeff(Word::from_string("AB")), 1);
  EXPECT_EQ(comm.coeff(Word::from_string("BA")), -1);
  EXPECT_EQ(comm.coeff(Word::from_string("AA")), 0);
  EXPECT_TRUE(NCPoly().coeff(Word::from_string("AB")).is_zero());
}

TEST(NCPoly, RingLawsProperty) {
  std::mt19937 rng(4321);
  bool saw_noncommuting = false;
  for (int trial = 0; trial < 150; ++trial) {
    NCPoly x = random_ncpoly(rng), y = random_ncpoly(rng), z = random_ncpoly(rng);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_EQ(x * NCPoly::one(), x);
    ASSERT_EQ(NCPoly::one() * x, x);
    ASSERT_EQ(x + y, y + x);
    saw_noncommuting = saw_noncommuting || (x * y != y * x);
  }
  EXPECT_TRUE(saw_noncommuting);
}

TEST(NCPoly, TextForm) {
  NCPoly p = NCPoly::letter(1) * P("b[1]+b[2]-1") + NCPoly::letter(0) * P("a[1]+a[2]-1");
  EXPECT_EQ(to_string(p), "(a[1]+a[2]-1)*A + (b[1]+b[2]-1)*B");
}

TEST(Rational, ParsingAndDoubles) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), invalid_input);
  EXPECT_THROW(parse_rational("0.5"), invalid_input);
  EXPECT_EQ(rational_from_double(0.5), Rational(1, 2));
  EXPECT_EQ(rational_from_double(-3.0), Rational(-3));
  EXPECT_EQ(to_double(rational_from_double(0.1)), 0.1);
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
}
