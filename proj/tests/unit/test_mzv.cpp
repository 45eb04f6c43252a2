#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rtm/errors.hpp"
#include "rtm/mzv.hpp"
#include "rtm/tree_maps.hpp"

using namespace rtm;
using namespace rtm::test;

namespace {

const PrecisionConfig cfg30(parse_rational("1e-30"));

bool within(const EvalResult& r, const Real& exact, const Real& slack) {
  return (r.value - exact).abs() <= r.bound + slack;
}

std::vector<ZIndex> admissible_indices(int max_weight) {
  std::vector<ZIndex> out;
  for (int n = 2; n <= max_weight; ++n)
    for (const auto& w : admissible_words(n)) out.push_back(z_encode(w));
  return out;
}

}  // namespace

TEST(Precision, BitsFromEps) {
  EXPECT_GE(cfg30.bits(), 2 * 100 + 64);
  EXPECT_THROW(PrecisionConfig(Rational(0)), DomainError);
  EXPECT_THROW(PrecisionConfig(Rational(-1)), DomainError);
  EXPECT_EQ(PrecisionConfig::from_string("1e-30").eps(), cfg30.eps());
}

TEST(LiHalf, KnownValues) {
  const PrecisionConfig cfg(parse_rational("1e-25"));
  const EvalResult log2 = li_half(W("y"), cfg);
  EXPECT_TRUE(within(log2, Real::log2(cfg.bits()), Real(parse_rational("1e-40"), cfg.bits())));
  EXPECT_NEAR(log2.value.to_double(), 0.6931471805599453, 1e-16);
  // Li_2(1/2) = π²/12 - (log 2)²/2
  const Real pi = Real::pi(cfg.bits());
  const Real l2 = Real::log2(cfg.bits());
  const Real li2 = pi.square() / Real(12L, cfg.bits()) - l2.square() / Real(2L, cfg.bits());
  const EvalResult r = li_half(W("xy"), cfg);
  EXPECT_TRUE(within(r, li2, Real(parse_rational("1e-40"), cfg.bits())));
  EXPECT_NEAR(r.value.to_double(), 0.5822405264650125, 1e-16);
  EXPECT_EQ(li_half(Word(), cfg).value.to_double(), 1.0);
}

TEST(Zeta, EvenValues) {
  const mpfr_prec_t bits = cfg30.bits();
  const Real pi = Real::pi(bits);
  const Real slack(parse_rational("1e-60"), bits);
  const EvalResult z2 = zeta_num(ZIndex{{2}}, cfg30);
  EXPECT_TRUE(within(z2, pi.square() / Real(6L, bits), slack)) << z2.to_string(35);
  const EvalResult z4 = zeta_num(ZIndex{{4}}, cfg30);
  EXPECT_TRUE(within(z4, pi.square().square() / Real(90L, bits), slack)) << z4.to_string(35);
  EXPECT_LE(z2.bound.to_double(), 1e-30);
}

TEST(Zeta, EulerAndDuality) {
  const EvalResult z3 = zeta_num(ZIndex{{3}}, cfg30);
  const EvalResult z21 = zeta_num(ZIndex{{2, 1}}, cfg30);
  EXPECT_LE((z3.value - z21.value).abs(), z3.bound + z21.bound);
  EXPECT_NEAR(z3.value.to_double(), 1.2020569031595942, 1e-15);
  for (const auto& k : admissible_indices(7)) {
    const Word w = z_decode(k);
    const EvalResult a = zeta_num(w, cfg30);
    const EvalResult b = zeta_num(dual(w), cfg30);
    EXPECT_LE((a.value - b.value).abs(), a.bound + b.bound) << to_string(k);
  }
}

TEST(Zeta, DomainErrors) {
  EXPECT_THROW(zeta_num(W("yy"), cfg30), DomainError);
  EXPECT_THROW(zeta_num(ZIndex{{1, 2}}, cfg30), DomainError);
  EXPECT_THROW(zeta_num(Word(), cfg30), DomainError);
}

TEST(Zeta, BoundIsHonest) {
  std::mt19937 rng(5);
  const auto all = admissible_indices(8);
  const PrecisionConfig loose(parse_rational("1e-20"));
  const PrecisionConfig tight(parse_rational("1e-21"));
  for (int i = 0; i < 20; ++i) {
    const ZIndex k = all[rng() % all.size()];
    const EvalResult a = zeta_num(k, loose);
    const EvalResult b = zeta_num(k, tight);
    EXPECT_LE(a.bound.to_double(), 1e-20);
    EXPECT_LE((a.value - b.value).abs(), a.bound) << to_string(k);
  }
}

TEST(Zeta, MatchesDirectSummation) {
  const long n_max = 1000000;
  for (const auto& k : admissible_indices(5)) {
    const EvalResult r = zeta_num(k, PrecisionConfig(parse_rational("1e-25")));
    const oracle::DirectSum d = oracle::direct_zeta(k, n_max);
    const long double v = static_cast<long double>(r.value.to_double());
    // Partial sums approach from below.
    EXPECT_GE(v, d.value - oracle::kDirectSumRounding) << to_string(k);
    EXPECT_LE(v, d.value + d.tail + oracle::kDirectSumRounding) << to_string(k);
    EXPECT_LT(d.tail, 1e-3L);
  }
}

TEST(ZEval, LinearCombinations) {
  // ζ(3) - ζ(2,1) = 0
  const EvalResult r = z_eval(ws({{"xxy", 1}, {"xyy", -1}}), cfg30);
  EXPECT_LE(r.value.abs(), r.bound);
  EXPECT_LE(r.bound.to_double(), 1e-30);
  const EvalResult c = z_eval(ws({{"", 3}}), cfg30);
  EXPECT_EQ(c.value.to_double(), 3.0);
  EXPECT_THROW(z_eval(ws({{"xyx", 1}}), cfg30), DomainError);
}

TEST(Kernel, TreeMapImagesVanish) {
  const KernelReport r = kernel_check(ForestSum(F("(())")), W("xy"), cfg30);
  EXPECT_EQ(r.image, ws({{"xyyy", 2}, {"xyxy", -1}, {"xxxy", -1}, {"xxyy", -1}}));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(kernel_check(ForestSum(F("()")), W("xy"), cfg30).pass);
}

TEST(Kernel, DetectsNonRelations) {
  // The identity "forest sum" 𝕀 is rejected, and a non-kernel element fails.
  EXPECT_THROW(kernel_check(ForestSum(Forest()), W("xy"), cfg30), DomainError);
  EXPECT_THROW(kernel_check(ForestSum(), W("xy"), cfg30), DomainError);
  EXPECT_THROW(kernel_check(ForestSum(F("()")), W("yy"), cfg30), DomainError);
}

TEST(Rendering, ValueAndBound) {
  const std::string s = zeta_num(ZIndex{{2}}, cfg30).to_string(17);
  EXPECT_EQ(s.rfind("1.644934066848226", 0), 0u) << s;
  EXPECT_NE(s.find(" ± "), std::string::npos);
  EXPECT_GE(digits_for(parse_rational("1e-30")), 30);
  EXPECT_EQ(digits_for(parse_rational("1e-3")), 17);
}
