#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace splitoc;

namespace {

CoeffPoly P(const char* text) { return parse_coeff_poly(text); }
Unknown U(const char* name) { return parse_unknown(name); }

SchemeSpec make(int s, Ansatz a, Assignment fixed = {}) {
  SchemeSpec spec;
  spec.stages = s;
  spec.ansatz = a;
  spec.fixed = std::move(fixed);
  return spec;
}

std::string describe(const Substitution& sub) {
  std::string out;
  for (const auto& [u, image] : sub)
    out += u.name() + "=" + to_string(image) + " ";
  return out;
}

} // namespace

TEST(Ansatz, PalindromicTwoStage) {
  auto sub = structural_identifications(make(2, Ansatz::palindromic));
  EXPECT_EQ(describe(sub), "b[1]=a[2] b[2]=a[1] ");
}

TEST(Ansatz, SymmetricBsZeroTwoStage) {
  auto sub = structural_identifications(make(2, Ansatz::symmetric_bs_zero));
  EXPECT_EQ(describe(sub), "a[2]=a[1] b[2]=0 ");
  // Strang (a = (1/2, 1/2), b = (1, 0)) fits this ansatz.
  Assignment strang{{U("a1"), Rational(1, 2)}, {U("a2"), Rational(1, 2)}, {U("b1"), 1}, {U("b2"), 0}};
  for (const auto& [u, image] : sub)
    EXPECT_EQ(evaluate(image, strang), strang.at(u)) << u.name();
}

TEST(Ansatz, SymmetricA1ZeroFourStage) {
  auto sub = structural_identifications(make(4, Ansatz::symmetric_a1_zero));
  EXPECT_EQ(describe(sub), "a[1]=0 a[4]=a[2] b[3]=b[2] b[4]=b[1] ");
  // Second Strang form a = (0, 1), b = (1/2, 1/2).
  auto sub2 = structural_identifications(make(2, Ansatz::symmetric_a1_zero));
  EXPECT_EQ(describe(sub2), "a[1]=0 b[2]=b[1] ");
}

TEST(Ansatz, SymmetricBsZeroFiveStage) {
  auto sub = structural_identifications(make(5, Ansatz::symmetric_bs_zero));
  EXPECT_EQ(describe(sub), "a[4]=a[2] a[5]=a[1] b[3]=b[2] b[4]=b[1] b[5]=0 ");
}

TEST(Ansatz, FixedSubsetEmptyIsIdentity) {
  SchemeSpec spec = make(3, Ansatz::fixed_subset);
  CoeffPoly p = P("3*a[2]^2*b[1]+a[3]-1");
  EXPECT_EQ(apply_ansatz(spec, p), p);
  auto system = order_conditions(spec, 3);
  SchemeSpec plain = make(3, Ansatz::plain);
  auto reference = order_conditions(plain, 3);
  EXPECT_EQ(system.blocks, reference.blocks);
}

TEST(Ansatz, FixedValuesAreSubstituted) {
  SchemeSpec spec = make(2, Ansatz::fixed_subset, {{U("a1"), Rational(1, 2)}, {U("b2"), 0}});
  EXPECT_EQ(apply_ansatz(spec, P("a[1]+a[2]-1")), P("a[2]-1/2"));
  auto system = order_conditions(spec, 2);
  EXPECT_EQ(system.blocks[0].conditions[1].poly, P("b[1]-1"));
  EXPECT_EQ(system.blocks[1].conditions[0].poly, P("2*a[2]*b[1]-1"));
}

TEST(Ansatz, FixedCombinedWithStructure) {
  SchemeSpec spec = make(2, Ansatz::palindromic, {{U("b2"), Rational(1, 3)}});
  auto sub = ansatz_substitution(spec);
  EXPECT_EQ(describe(sub), "a[1]=1/3 b[1]=a[2] b[2]=1/3 ");
}

TEST(Ansatz, ContradictionsAreRejected) {
  EXPECT_THROW(ansatz_substitution(make(2, Ansatz::symmetric_a1_zero, {{U("a1"), 1}})), invalid_input);
  EXPECT_THROW(ansatz_substitution(make(2, Ansatz::palindromic, {{U("a1"), 1}, {U("b2"), 2}})),
               invalid_input);
  EXPECT_NO_THROW(ansatz_substitution(make(2, Ansatz::palindromic, {{U("a1"), 1}, {U("b2"), 1}})));
  EXPECT_NO_THROW(ansatz_substitution(make(2, Ansatz::symmetric_a1_zero, {{U("a1"), 0}})));
  EXPECT_THROW(make(2, Ansatz::plain, {{U("a3"), 1}}).validate(), invalid_input);
  EXPECT_THROW(make(2, Ansatz::plain, {{U("c1"), 1}}).validate(), invalid_input);
  SchemeSpec three = make(2, Ansatz::palindromic);
  three.operators = 3;
  EXPECT_THROW(three.validate(), invalid_input);
}

TEST(Ansatz, SymmetricSystemsSkipEvenOrders) {
  auto system = order_conditions(make(3, Ansatz::symmetric_bs_zero), 4);
  ASSERT_EQ(system.blocks.size(), 2u);
  EXPECT_EQ(system.blocks[0].order, 1);
  EXPECT_EQ(system.blocks[1].order, 3);
  // Strang: a1 = a2, b2 = 0 leaves 2*a[1]-1 and b[1]-1 at order one.
  auto strang = order_conditions(make(2, Ansatz::symmetric_bs_zero), 2);
  ASSERT_EQ(strang.blocks.size(), 1u);
  ASSERT_EQ(strang.blocks[0].conditions.size(), 2u);
  EXPECT_EQ(strang.blocks[0].conditions[0].poly, P("2*a[1]-1"));
  EXPECT_EQ(strang.blocks[0].conditions[1].poly, P("b[1]-1"));
}

TEST(Ansatz, ReducedSystemsAgreeWithPlainSystemOnAnsatzPoints) {
  // Substituting ansatz values into the plain system must give the same
  // numbers as evaluating the reduced system at the free values.
  for (Ansatz a : {Ansatz::symmetric_a1_zero, Ansatz::symmetric_bs_zero, Ansatz::palindromic}) {
    SchemeSpec spec = make(4, a);
    Assignment free;
    int n = 1;
    for (Unknown u : spec.unknowns())
      free[u] = Rational(n++, 7);
    Assignment full = expand_free_values(spec, free);
    auto plain_system = order_conditions(make(4, Ansatz::plain), 5);
    auto reduced = order_conditions(spec, 5);
    for (const auto& block : reduced.blocks) {
      const auto& plain_block = plain_system.blocks[static_cast<std::size_t>(block.order - 1)];
      for (const auto& c : block.conditions) {
        auto it = std::find_if(plain_block.conditions.begin(), plain_block.conditions.end(),
                               [&](const Condition& pc) { return pc.word == c.word; });
        ASSERT_NE(it, plain_block.conditions.end());
        ASSERT_EQ(evaluate(c.poly, free), evaluate(it->poly, full)) << c.word.str();
      }
    }
  }
}
