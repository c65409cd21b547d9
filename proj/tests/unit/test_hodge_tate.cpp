#include <algorithm>

#include <gtest/gtest.h>

#include "cansub/error.hpp"
#include "cansub/grid.hpp"
#include "cansub/hodge_tate.hpp"
#include "cansub/torsion.hpp"
#include "oracles.hpp"

namespace cansub {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }
HTClass cls(std::int64_t p, Rational h, ExtNat a) { return HTClass(CurveParams(p, std::move(h)), a); }

TEST(FarguesSumTest, Examples) {
  EXPECT_EQ(fargues_sum(cls(2, q(1, 3), ExtNat(0)), 2), ValExt(q(1, 3)));
  EXPECT_TRUE(fargues_sum(cls(3, q(0), ExtNat::inf()), 4).is_inf());
  EXPECT_EQ(fargues_sum(cls(2, q(9, 10), ExtNat(0)), 3), ValExt(q(2, 3)));
}

TEST(FarguesSumTest, InsufficientLevel) {
  try {
    fargues_sum(cls(2, q(1, 3), ExtNat(0)), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInsufficientLevel);
  }
  EXPECT_THROW(fargues_sum(cls(3, q(0), ExtNat(2)), 2), Error);
  EXPECT_NO_THROW(fargues_sum(cls(3, q(0), ExtNat(2)), 3));
}

// Element-wise sum over Z/p^k, checking the class-counted summation.
ValExt elementwise_fargues(const HTClass& c, int k) {
  const auto& params = c.params();
  const auto p = params.p();
  std::int64_t order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  const int a = params.reduction() == Reduction::kTooSupersingular ? 0 : c.a().value();
  Rational all;
  Rational sub;
  for (std::int64_t t = 1; t < order; ++t) {
    int level = k - testing::p_adic_order(t, p);
    int depth = std::min(a, level);
    Rational v;
    if (!(params.reduction() == Reduction::kOrdinary && depth < level)) {
      v = oracle_valuation(params, {level, depth}).value();
    }
    all += v;
    if (level < k) sub += v;
  }
  return ValExt(Rational(p * all / (p - 1) - sub / (p - 1)));
}

TEST(FarguesSumTest, MatchesElementwiseEnumeration) {
  for (std::int64_t p : {2, 3}) {
    for (const auto& h : boundary_grid(p, 2)) {
      CurveParams params(p, h);
      for (ExtNat a : admissible_ht_depths(params, 2)) {
        if (a.is_inf()) continue;
        HTClass c(params, a);
        for (int k = fargues_min_level(c); k <= fargues_min_level(c) + 1 && k <= 5; ++k) {
          EXPECT_EQ(fargues_sum(c, k), elementwise_fargues(c, k));
        }
      }
    }
  }
}

TEST(ClosedFormHTTest, Examples) {
  EXPECT_EQ(ht_closed_form(cls(2, q(1, 3), ExtNat(1))), ValExt(q(4, 3)));
  EXPECT_EQ(ht_closed_form(cls(2, q(1, 3), ExtNat(0))), ValExt(q(1, 3)));
  EXPECT_EQ(ht_closed_form(cls(5, q(9, 10), ExtNat(3))), ValExt(q(5, 24)));
  EXPECT_TRUE(ht_closed_form(cls(3, q(0), ExtNat::inf())).is_inf());
  EXPECT_EQ(ht_closed_form(cls(3, q(0), ExtNat(2))), ValExt(2));
}

TEST(HTClassTest, Validation) {
  EXPECT_THROW(cls(2, q(1, 3), ExtNat::inf()), Error);
  EXPECT_THROW(cls(2, q(1, 3), ExtNat(2)), Error);
  EXPECT_NO_THROW(cls(2, q(1), ExtNat(7)));
}

TEST(RemarkTest, Examples) {
  auto at_boundary = remark_bounds(CurveParams(2, q(1, 3)));
  EXPECT_TRUE(at_boundary.holds());
  EXPECT_TRUE(at_boundary.right_equality());
  EXPECT_EQ(at_boundary.middle, q(4, 3));
  EXPECT_TRUE(remark_inequalities(CurveParams(3, q(1, 5))));
  EXPECT_TRUE(remark_inequalities(CurveParams(2, q(1, 2))));
  EXPECT_FALSE(remark_bounds(CurveParams(2, q(1, 2))).right_equality());
  EXPECT_THROW(remark_inequalities(CurveParams(2, q(0))), Error);
  EXPECT_THROW(remark_inequalities(CurveParams(2, q(2, 3))), Error);
}

TEST(OmegaPlusTest, Examples) {
  EXPECT_EQ(omega_plus_valuation(CurveParams(2, q(1, 3))), q(1, 3));
  EXPECT_EQ(omega_plus_valuation(CurveParams(2, q(1))), q(2, 3));
  EXPECT_EQ(omega_plus_valuation(CurveParams(3, q(0))), q(0));
}

TEST(BallsTest, Examples) {
  auto b1 = ht_image_balls(cls(2, q(1, 3), ExtNat(0)), 1, 1);
  EXPECT_EQ(b1.scale_val, q(1, 3));
  EXPECT_EQ(b1.radius_val, q(4, 3));
  EXPECT_TRUE(b1.disjoint);

  auto b2 = ht_image_balls(cls(2, q(1, 3), ExtNat(1)), 1, 1);
  EXPECT_EQ(b2.scale_val, q(4, 3));
  EXPECT_EQ(b2.radius_val, q(4, 3));
  EXPECT_FALSE(b2.disjoint);

  auto b3 = ht_image_balls(cls(3, q(0), ExtNat(0)), 2, 2);
  EXPECT_EQ(b3.scale_val, q(0));
  EXPECT_EQ(b3.radius_val, q(2));
  EXPECT_TRUE(b3.disjoint);
}

TEST(BallsTest, Errors) {
  try {
    ht_image_balls(cls(3, q(0), ExtNat::inf()), 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateImage);
  }
  EXPECT_THROW(ht_image_balls(cls(2, q(1, 3), ExtNat(0)), 1, 2), Error);
  EXPECT_THROW(ht_image_balls(cls(2, q(1, 3), ExtNat(0)), 1, 0), Error);
}

TEST(NonvanishingTest, Examples) {
  EXPECT_TRUE(nonvanishing_check(cls(2, q(1, 3), ExtNat(0)), 1));
  EXPECT_FALSE(nonvanishing_check(cls(2, q(1, 3), ExtNat(1)), 1));
  EXPECT_FALSE(nonvanishing_check(cls(3, q(0), ExtNat::inf()), 5));
  // strictly above 1/(p^(m-1)(p+1)) the a = n = m case is nonzero
  EXPECT_TRUE(nonvanishing_check(cls(2, q(1, 2), ExtNat(1)), 1));
}

TEST(InvertibilityTest, Examples) {
  EXPECT_TRUE(invertibility_verdict(q(1), 1, make_ball_union(q(1, 3), 1, q(4, 3))));
  EXPECT_FALSE(invertibility_verdict(q(1), 2, make_ball_union(q(1, 3), 2, q(10, 3))));
  EXPECT_FALSE(invertibility_verdict(q(2), 1, make_ball_union(q(0), 1, q(1))));
}

TEST(HodgeTateProperty, ClosedFormMatchesFarguesAndIsStableInK) {
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& h : boundary_grid(p, 2)) {
      CurveParams params(p, h);
      for (ExtNat a : admissible_ht_depths(params, 3)) {
        HTClass c(params, a);
        ValExt expected = ht_closed_form(c);
        int k0 = fargues_min_level(c);
        for (int k = k0; k <= k0 + 3; ++k) EXPECT_EQ(fargues_sum(c, k), expected);
      }
    }
  }
}

TEST(HodgeTateProperty, MinimumOverDepthsIsOmegaPlus) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (const auto& h : boundary_grid(p, 3)) {
      CurveParams params(p, h);
      ValExt best = ValExt::inf();
      for (ExtNat a : admissible_ht_depths(params, 4)) best = min(best, ht_closed_form(HTClass(params, a)));
      EXPECT_EQ(best, ValExt(omega_plus_valuation(params)));
    }
  }
}

TEST(HodgeTateProperty, EtaleDualCaseFillsTheCanonicalLocus) {
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& h : boundary_grid(p, 3)) {
      CurveParams params(p, h);
      if (h > params.threshold()) continue;
      for (int m = 1; m <= 4; ++m) {
        auto ball = ht_image_balls(HTClass(params, ExtNat(0)), m, m);
        EXPECT_EQ(ball.scale_val, Rational(h / (p - 1)));
        EXPECT_TRUE(ball.disjoint);
        EXPECT_EQ(ball.radius_gap(), Rational(m));
      }
    }
  }
}

}  // namespace
}  // namespace cansub
