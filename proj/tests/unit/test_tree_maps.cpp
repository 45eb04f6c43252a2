#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "rtm/errors.hpp"
#include "rtm/hopf.hpp"
#include "rtm/tree_maps.hpp"

using namespace rtm;
using namespace rtm::test;

namespace {

const WordSum x = letter_sum(Letter::x);
const WordSum y = letter_sum(Letter::y);
const WordSum x_plus_2y = ws({{"x", 1}, {"y", 2}});

// Tree case straight from the definition: R_y R_{x+2y} R_y^{-1} applied to the branches' image.
WordSum tree_step(const WordSum& branches_image) { return r_y_inverse(branches_image) * x_plus_2y * y; }

}  // namespace

TEST(TreeMaps, UnitIsIdentity) {
  EXPECT_EQ(rtm::apply(Forest(), W("xyxy")), ws({{"xyxy", 1}}));
  EXPECT_EQ(rtm::apply(F("(())"), Word()), WordSum());
  EXPECT_EQ(rtm::apply(Forest(), Word()), WordSum(Word()));
}

TEST(TreeMaps, VertexOnLetters) {
  EXPECT_EQ(apply_letter(F("()"), Letter::x), ws({{"xy", 1}}));
  EXPECT_EQ(apply_letter(F("()"), Letter::y), ws({{"xy", -1}}));
}

TEST(TreeMaps, LadderTwoOnX) {
  EXPECT_EQ(apply_letter(ladder(2), Letter::x), ws({{"xxy", 1}, {"xyy", 2}}));
  EXPECT_EQ(apply_letter(ladder(2), Letter::x), tree_step(ws({{"xy", 1}})));
}

TEST(TreeMaps, VertexOnXY) {
  // Leibniz on the two letters: •(x)y + x•(y).
  const WordSum expected = apply_letter(F("()"), Letter::x) * y + x * apply_letter(F("()"), Letter::y);
  EXPECT_EQ(expected, ws({{"xyy", 1}, {"xxy", -1}}));
  EXPECT_EQ(rtm::apply(F("()"), W("xy")), expected);
}

TEST(TreeMaps, CherryOnX) {
  const WordSum branches = ws({{"xyy", 1}, {"xxy", -1}});  // (••)(x) = •(xy)
  EXPECT_EQ(rtm::apply(F("()()"), W("x")), branches);
  const WordSum expected = ws({{"xyxy", 1}, {"xyyy", 2}, {"xxxy", -1}, {"xxyy", -2}});
  EXPECT_EQ(tree_step(branches), expected);
  EXPECT_EQ(rtm::apply(F("(()())"), W("x")), expected);
}

TEST(TreeMaps, LadderTwoOnXY) {
  // Δ(λ₂) = λ₂⊗1 + •⊗• + 1⊗λ₂, so λ₂(xy) = λ₂(x)y + •(x)•(y) + xλ₂(y).
  const WordSum vx = apply_letter(F("()"), Letter::x);
  const WordSum vy = apply_letter(F("()"), Letter::y);
  const WordSum expected =
      apply_letter(ladder(2), Letter::x) * y + vx * vy + x * apply_letter(ladder(2), Letter::y);
  EXPECT_EQ(expected, ws({{"xyyy", 2}, {"xyxy", -1}, {"xxxy", -1}, {"xxyy", -1}}));
  EXPECT_EQ(rtm::apply(ladder(2), W("xy")), expected);
}

TEST(TreeMaps, GeneratorImagesSumToXPlusYTimesSomething) {
  // t(x) + t(y) = 0 for every nonempty forest.
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n))
      EXPECT_TRUE((apply_letter(f, Letter::x) + apply_letter(f, Letter::y)).is_zero()) << f.key();
}

TEST(TreeMaps, SplitCompatibility) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n))
      for (int trial = 0; trial < 3; ++trial) {
        const auto words = words_of_weight(4);
        const Word w = words[rng() % words.size()];
        const Word v = words_of_weight(2)[rng() % 4];
        WordSum expected;
        for (const auto& [pair, c] : coproduct(f))
          expected.add_scaled(rtm::apply(pair.first, w) * rtm::apply(pair.second, v), c);
        EXPECT_EQ(rtm::apply(f, w * v), expected) << f.key() << " " << w.text() << "|" << v.text();
      }
}

TEST(TreeMaps, PreservesAdmissibility) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n))
      for (int k = 2; k <= 4; ++k)
        for (const auto& w : admissible_words(k)) {
          const WordSum image = rtm::apply(f, w);
          EXPECT_TRUE(is_admissible(image)) << f.key() << " " << w.text();
          for (const auto& [u, c] : image) EXPECT_EQ(u.weight(), n + k);
        }
}

TEST(TreeMaps, ForestFactorOrderDoesNotMatter) {
  const Tree a = b_plus(F("()"));
  const Tree b = b_plus(F("()()"));
  const Tree c = b_plus(Forest());
  for (const auto& w : words_of_weight(3)) {
    // Compose tree maps by hand in two different orders.
    const WordSum abc = rtm::apply(Forest(a), rtm::apply(Forest(b), rtm::apply(Forest(c), w)));
    const WordSum cba = rtm::apply(Forest(c), rtm::apply(Forest(b), rtm::apply(Forest(a), w)));
    EXPECT_EQ(abc, cba) << w.text();
    EXPECT_EQ(rtm::apply(Forest(std::vector<Tree>{a, b, c}), w), abc);
  }
}

TEST(TreeMaps, LinearInTheForest) {
  const ForestSum s = fs({{"(())", q(2)}, {"()()", q(-1, 3)}});
  const WordSum w = ws({{"xy", 1}, {"xxy", 5}});
  WordSum expected;
  expected.add_scaled(rtm::apply(F("(())"), w), q(2));
  expected.add_scaled(rtm::apply(F("()()"), w), q(-1, 3));
  EXPECT_EQ(rtm::apply(s, w), expected);
}

TEST(TreeMaps, CacheIsTransparent) {
  TreeMapEngine cached;
  TreeMapEngine uncached(0);
  TreeMapEngine tiny(3);
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : enumerate_forests(n))
      for (const auto& w : words_of_weight(3)) {
        const WordSum a = cached.apply(f, w);
        EXPECT_EQ(a, uncached.apply(f, w));
        EXPECT_EQ(a, tiny.apply(f, w));
        EXPECT_EQ(a, cached.apply(f, w));
      }
  EXPECT_GT(cached.cache_size(), 0u);
  EXPECT_LE(tiny.cache_size(), 3u);
  cached.clear();
  EXPECT_EQ(cached.cache_size(), 0u);
}

TEST(Partial, GeneratorImages) {
  EXPECT_EQ(partial_generator_image(1), ws({{"xy", 1}}));
  EXPECT_EQ(partial_generator_image(2), ws({{"xxy", 1}, {"xyy", 1}}));
  EXPECT_EQ(partial_n(1, W("x")), ws({{"xy", 1}}));
  EXPECT_EQ(partial_n(2, W("x")), ws({{"xxy", 1}, {"xyy", 1}}));
  EXPECT_EQ(partial_n(2, W("y")), ws({{"xxy", -1}, {"xyy", -1}}));
  EXPECT_EQ(partial_n(1, Word()), WordSum());
  EXPECT_THROW(partial_n(0, W("x")), DomainError);
}

TEST(Partial, LeibnizRule) {
  // ∂_1(xy) = xyy - xxy
  EXPECT_EQ(partial_n(1, W("xy")), ws({{"xyy", 1}, {"xxy", -1}}));
  for (int n = 1; n <= 3; ++n)
    for (const auto& u : words_of_weight(2))
      for (const auto& v : words_of_weight(2))
        EXPECT_EQ(partial_n(n, u * v), partial_n(n, u) * WordSum(v) + WordSum(u) * partial_n(n, v));
}

TEST(Partial, AsForestSums) {
  EXPECT_EQ(partial_as_forest_sum(1), fs({{"()", q(1)}}));
  EXPECT_EQ(partial_as_forest_sum(2), fs({{"(())", q(2, 3)}, {"()()", q(-1, 3)}}));
  EXPECT_EQ(partial_as_forest_sum(3), fs({{"((()))", q(3, 7)}, {"(())()", q(-3, 7)}, {"()()()", q(1, 7)}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : words_of_weight(3)) EXPECT_EQ(rtm::apply(partial_as_forest_sum(n), WordSum(w)), partial_n(n, w));
}

TEST(Partial, PreservesAdmissibility) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 2; k <= 5; ++k)
      for (const auto& w : admissible_words(k)) EXPECT_TRUE(is_admissible(partial_n(n, w)));
}
