#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rtm/hopf.hpp"

using namespace rtm;
using namespace rtm::test;

namespace {

TensorSum ts(std::initializer_list<std::tuple<const char*, const char*, long>> terms) {
  TensorSum out;
  for (const auto& [l, r, c] : terms) out.add({F(l), F(r)}, Rational(c));
  return out;
}

// Admissible cuts by brute force: every subset of non-root edges of a tree.
// The pruned part goes left, the trunk (containing the root) goes right.
TensorSum oracle_tree_coproduct(const Tree& t) {
  struct Node {
    int parent;
    std::vector<int> kids;
  };
  std::vector<Node> nodes;
  std::function<int(const Tree&, int)> build = [&](const Tree& tree, int parent) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({parent, {}});
    for (const auto& child : tree.branches().trees()) {
      const int c = build(child, id);
      nodes[static_cast<std::size_t>(id)].kids.push_back(c);
    }
    return id;
  };
  build(t, -1);
  const int n = static_cast<int>(nodes.size());
  std::function<Tree(int, const std::vector<bool>&)> subtree = [&](int v, const std::vector<bool>& cut) {
    std::vector<Tree> kids;
    for (int c : nodes[static_cast<std::size_t>(v)].kids)
      if (!cut[static_cast<std::size_t>(c)]) kids.push_back(subtree(c, cut));
    return b_plus(Forest(kids));
  };
  TensorSum out;
  out.add({Forest(t), Forest()}, 1);
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    // cut[v]: the edge from v to its parent is cut (v >= 1).
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) cut[static_cast<std::size_t>(v)] = mask >> (v - 1) & 1u;
    bool admissible = true;
    for (int v = 1; v < n && admissible; ++v) {
      if (!cut[static_cast<std::size_t>(v)]) continue;
      for (int a = nodes[static_cast<std::size_t>(v)].parent; a > 0; a = nodes[static_cast<std::size_t>(a)].parent)
        if (cut[static_cast<std::size_t>(a)]) admissible = false;
    }
    if (!admissible) continue;
    std::vector<Tree> pruned;
    for (int v = 1; v < n; ++v)
      if (cut[static_cast<std::size_t>(v)]) pruned.push_back(subtree(v, cut));
    out.add({Forest(pruned), Forest(subtree(0, cut))}, 1);
  }
  return out;
}

}  // namespace

TEST(Coproduct, Cherry) {
  const TensorSum expected = ts({{"(()())", "1", 1}, {"1", "(()())", 1}, {"()", "(())", 2}, {"()()", "()", 1}});
  EXPECT_EQ(coproduct(F("(()())")), expected);
}

TEST(Coproduct, UnitAndVertex) {
  EXPECT_EQ(coproduct(Forest()), ts({{"1", "1", 1}}));
  EXPECT_EQ(coproduct(F("()")), ts({{"()", "1", 1}, {"1", "()", 1}}));
}

TEST(Coproduct, MatchesAdmissibleCutOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) EXPECT_EQ(coproduct(Forest(t)), oracle_tree_coproduct(t)) << t.key();
}

TEST(Coproduct, LadderThree) {
  EXPECT_EQ(coproduct(ladder(3)),
            ts({{"((()))", "1", 1}, {"(())", "()", 1}, {"()", "(())", 1}, {"1", "((()))", 1}}));
}

TEST(Coproduct, IsMultiplicative) {
  const Forest a = F("(())");
  const Forest b = F("(()())");
  const TensorSum lhs = coproduct(a * b);
  const TensorSum rhs = tensor_product(coproduct(a), coproduct(b));
  EXPECT_EQ(lhs, rhs);
}

TEST(Coproduct, CocommutativityIsNotAssumed) {
  const TensorSum d = coproduct(F("(()())"));
  EXPECT_NE(d, swap_factors(d));
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(coproduct(ladder(m)), swap_factors(coproduct(ladder(m))));
  const TensorSum v = coproduct(F("()()()"));
  EXPECT_EQ(v, swap_factors(v));
}

TEST(Counit, CoefficientOfUnit) {
  EXPECT_EQ(counit(Forest()), 1);
  EXPECT_EQ(counit(F("()")), 0);
  EXPECT_EQ(counit(fs({{"1", q(3, 2)}, {"()", q(5)}})), q(3, 2));
  EXPECT_EQ(counit(fs({{"1", q(3)}, {"(())", q(-2)}})), q(3));
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode(Forest()), ForestSum(Forest()));
  EXPECT_EQ(antipode(F("()")), fs({{"()", q(-1)}}));
  EXPECT_EQ(antipode(ladder(2)), fs({{"(())", q(-1)}, {"()()", q(1)}}));
  EXPECT_EQ(antipode(F("()()()()")), fs({{"()()()()", q(1)}}));
  EXPECT_EQ(antipode(F("(()())")), fs({{"(()())", q(-1)}, {"(())()", q(2)}, {"()()()", q(-1)}}));
}

TEST(Antipode, IsAnInvolutionOnCommutativeHopfAlgebra) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n)) EXPECT_EQ(antipode(antipode(ForestSum(f))), ForestSum(f)) << f.key();
}

TEST(Grading, ScalesByDegree) {
  EXPECT_TRUE(grading(ForestSum(Forest())).is_zero());
  EXPECT_EQ(grading(fs({{"()", q(1)}})), fs({{"()", q(1)}}));
  EXPECT_EQ(grading(fs({{"(()())", q(1)}, {"(())", q(2)}})), fs({{"(()())", q(3)}, {"(())", q(4)}}));
  EXPECT_EQ(grading(fs({{"1", q(4)}, {"(())()", q(1)}})), fs({{"(())()", q(3)}}));
}

TEST(Dynkin, Examples) {
  EXPECT_EQ(dynkin(F("()")), fs({{"()", q(1)}}));
  EXPECT_EQ(dynkin(ladder(2)), fs({{"(())", q(2)}, {"()()", q(-1)}}));
  EXPECT_TRUE(dynkin(F("()()")).is_zero());
  EXPECT_TRUE(dynkin(Forest()).is_zero());
  EXPECT_EQ(dynkin(ladder(3)), fs({{"((()))", q(3)}, {"(())()", q(-3)}, {"()()()", q(1)}}));
}

TEST(Dynkin, KillsProductsOfPositiveDegree) {
  // D(ab) = D(a)ε(b) + ε(a)D(b) in a commutative connected Hopf algebra.
  for (const auto& a : enumerate_forests(2))
    for (const auto& b : enumerate_forests(2)) EXPECT_TRUE(dynkin(a * b).is_zero()) << a.key() << b.key();
}

TEST(Ladder, KeysAndProducts) {
  EXPECT_TRUE(ladder(0).empty());
  EXPECT_EQ(ladder(1).key(), "()");
  EXPECT_EQ(ladder(3).key(), "((()))");
  EXPECT_EQ(ladder_product({1, 2}).key(), "(())()");
  EXPECT_EQ(ladder_product({2, 1}), ladder_product({1, 2}));
}

TEST(Compositions, CountAndOrder) {
  EXPECT_EQ(compositions(0), std::vector<std::vector<int>>{{}});
  EXPECT_EQ(compositions(3), (std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(Multiply, InverseOfTensorProduct) {
  EXPECT_EQ(multiply(coproduct(F("()"))), fs({{"()", q(2)}}));
}
