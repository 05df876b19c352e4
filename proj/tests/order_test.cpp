#include "rieszkit/order.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rieszkit {
namespace {

LinearFunctional F(std::vector<std::string> w) {
  RatVec r;
  for (const auto& s : w) r.push_back(parse_rational(s));
  return LinearFunctional(std::move(r));
}

IntVec V(std::vector<std::int64_t> v) { return from_int64(v); }

TEST(OrderFromFunctionals, Lexicographic) {
  const OrderChain lex = order_from_functionals(2, {F({"1", "0"}), F({"0", "1"})});
  ASSERT_EQ(lex.length(), 2u);
  EXPECT_EQ(lex.subgroup(1), Lattice::full(2));
  EXPECT_EQ(lex.subgroup(2), hnf(2, {V({0, 1})}));
  EXPECT_EQ(lex.subgroup(3).rank(), 0u);
  EXPECT_EQ(lex.lower(1), lex.subgroup(2));
}

TEST(OrderFromFunctionals, IrrationalSurrogateNeedsTieBreak) {
  // 1393/985 is a convergent of sqrt(2): the kernel of (985, -1393) is span{(1393, 985)}.
  EXPECT_THROW(order_from_functionals(2, {F({"1", "-1393/985"})}), InvalidArgument);
  const OrderChain chain = order_from_functionals(2, {F({"1", "-1393/985"}), F({"1", "0"})});
  EXPECT_EQ(chain.subgroup(2), hnf(2, {V({1393, 985})}));
  // On a window the second stage is invisible: every nonzero point is decided by psi_1.
  oracle::for_each_in_box(2, 20, [&](const oracle::Point& p) {
    if (p[0] == 0 && p[1] == 0) return;
    EXPECT_NE(chain.functional(1)(from_int64(p)), 0);
  });
}

TEST(OrderFromFunctionals, OneDimensional) {
  const OrderChain chain = order_from_functionals(1, {F({"1"})});
  for (std::int64_t n = -5; n <= 5; ++n) EXPECT_EQ(in_P(chain, V({n})), n >= 0);
}

TEST(OrderFromFunctionals, Rejections) {
  EXPECT_THROW(order_from_functionals(2, {F({"1", "0"})}), InvalidArgument);
  EXPECT_THROW(order_from_functionals(2, {F({"1", "0"}), F({"2", "0"})}), InvalidArgument);
  EXPECT_THROW(F({"0", "0"}), InvalidArgument);
  EXPECT_THROW(order_from_functionals(3, {F({"1", "0"})}), InvalidArgument);
}

TEST(InP, Lexicographic) {
  const OrderChain lex = lexicographic_order(2);
  EXPECT_TRUE(in_P(lex, V({1, -5})));
  EXPECT_FALSE(in_P(lex, V({0, -2})));
  EXPECT_TRUE(in_P(lex, V({0, 0})));
}

TEST(BlockMembership, Lexicographic) {
  const OrderChain lex = lexicographic_order(2);
  EXPECT_EQ(block_membership(lex, 1, V({3, -1})), Block::kPlus);
  EXPECT_EQ(block_membership(lex, 2, V({0, -1})), Block::kMinus);
  EXPECT_EQ(block_membership(lex, 1, V({0, 5})), Block::kLower);
  EXPECT_EQ(block_membership(lex, 2, V({1, 5})), Block::kOutside);
  EXPECT_THROW(block_membership(lex, 3, V({0, 0})), InvalidArgument);
}

TEST(ClassifyCoset, Examples) {
  const OrderChain lex = lexicographic_order(2);
  const Lattice vertical = hnf(2, {V({0, 1})});
  const LatticeCoset right(V({1, 0}), vertical);
  EXPECT_EQ(classify_coset(lex, right), CosetSign::kInsideP);
  oracle::for_each_in_box(2, 6, [&](const oracle::Point& p) {
    if (right.contains(from_int64(p))) EXPECT_TRUE(in_P(lex, from_int64(p)));
  });
  EXPECT_EQ(classify_coset(lex, LatticeCoset(V({0, 0}), vertical)), CosetSign::kMixed);
  EXPECT_EQ(classify_coset(lex, LatticeCoset(V({-2, 3}), vertical)), CosetSign::kInsideMinusP);
  EXPECT_EQ(classify_coset(lex, LatticeCoset(V({0, 0}), Lattice::zero(2))), CosetSign::kZero);
  EXPECT_EQ(classify_coset(lex, LatticeCoset(V({0, 4}), Lattice::zero(2))), CosetSign::kInsideP);
}

TEST(ValidateAxioms, FunctionalOrdersPass) {
  EXPECT_TRUE(validate_axioms(lexicographic_order(2), 8).passed());
  EXPECT_TRUE(validate_axioms(order_from_functionals(2, {F({"1", "-2"}), F({"0", "1"})}), 8).passed());
  EXPECT_TRUE(validate_axioms(lexicographic_order(3), 3).passed());
}

TEST(ValidateAxioms, BrokenPredicateReportsMinimalCounterexample) {
  const auto report = validate_axioms(2, [](const IntVec& chi) { return chi[0] >= -1; }, 8);
  ASSERT_FALSE(report.passed());
  const auto it = std::find_if(report.violations.begin(), report.violations.end(),
                               [](const AxiomViolation& v) { return v.axiom == "closure"; });
  ASSERT_NE(it, report.violations.end());
  EXPECT_EQ(it->witness[0], V({-1, 0}));
  EXPECT_EQ(it->witness[1], V({-1, 0}));
  EXPECT_EQ(it->witness[2], V({-2, 0}));
}

// --- properties -------------------------------------------------------------

std::vector<OrderChain> sample_chains() {
  return {lexicographic_order(2),
          lexicographic_order(3),
          order_from_functionals(2, {F({"1", "-2"}), F({"0", "1"})}),
          order_from_functionals(2, {F({"1", "-1393/985"}), F({"-1", "0"})}),
          order_from_functionals(3, {F({"1", "1", "0"}), F({"0", "1", "-1/2"}), F({"0", "0", "1"})}),
          order_from_functionals(3, {F({"2", "-1", "3"}), F({"1", "1", "1"}), F({"0", "0", "-1"})})};
}

TEST(OrderProperties, ExactlyOneOfPositiveNegativeZero) {
  for (const auto& chain : sample_chains()) {
    oracle::for_each_in_box(chain.dim(), chain.dim() == 2 ? 7 : 3, [&](const oracle::Point& p) {
      const IntVec v = from_int64(p);
      const bool zero = is_zero(v);
      const bool pos = in_P(chain, v) && !zero;
      const bool neg = in_P(chain, -v) && !zero;
      EXPECT_EQ(int(zero) + int(pos) + int(neg), 1);
    });
  }
}

TEST(OrderProperties, BlocksTileTheWindow) {
  for (const auto& chain : sample_chains()) {
    oracle::for_each_in_box(chain.dim(), chain.dim() == 2 ? 7 : 3, [&](const oracle::Point& p) {
      const IntVec v = from_int64(p);
      int hits = 0;
      for (std::size_t j = 1; j <= chain.length(); ++j) {
        const Block b = block_membership(chain, j, v);
        if (b == Block::kPlus || b == Block::kMinus) {
          ++hits;
          EXPECT_EQ(b == Block::kPlus, in_P(chain, v));
        }
      }
      EXPECT_EQ(hits, is_zero(v) ? 0 : 1);
    });
  }
}

TEST(OrderProperties, InsidePCosetsEnumerateInsideP) {
  for (const auto& chain : sample_chains()) {
    const std::size_t d = chain.dim();
    for (std::size_t j = 1; j <= chain.length() + 1; ++j) {
      oracle::for_each_in_box(d, 2, [&](const oracle::Point& off) {
        const LatticeCoset c(from_int64(off), chain.subgroup(j));
        const CosetSign s = classify_coset(chain, c);
        oracle::for_each_in_box(d, d == 2 ? 5 : 3, [&](const oracle::Point& p) {
          const IntVec v = from_int64(p);
          if (!c.contains(v)) return;
          if (s == CosetSign::kInsideP) EXPECT_TRUE(in_P(chain, v));
          if (s == CosetSign::kInsideMinusP) EXPECT_TRUE(in_P(chain, -v) && !is_zero(v));
        });
      });
    }
  }
}

}  // namespace
}  // namespace rieszkit
