#include <gtest/gtest.h>

#include "cansub/error.hpp"
#include "cansub/grid.hpp"
#include "cansub/torsion.hpp"

namespace cansub {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(ClosedFormTest, CaseTableExamples) {
  EXPECT_EQ(closed_form_valuation(CurveParams(2, q(1, 3)), {1, 1}), ValExt(q(2, 3)));
  EXPECT_EQ(closed_form_valuation(CurveParams(2, q(1, 3)), {2, 0}), ValExt(q(1, 24)));
  EXPECT_EQ(closed_form_valuation(CurveParams(3, q(9, 10)), {2, 0}), ValExt(q(1, 72)));
  EXPECT_EQ(closed_form_valuation(CurveParams(5, q(0)), {3, 3}), ValExt(q(1, 100)));
}

TEST(ClosedFormTest, SecondRowOfTableIsGenericDepthKMinusOne) {
  // a = k-1 with k <= n gives h/(p(p-1)); p=2, h=1/12 has n=3.
  CurveParams params(2, q(1, 12));
  ASSERT_EQ(params.n(), ExtNat(3));
  for (int k = 1; k <= 3; ++k) {
    if (k >= 2) EXPECT_EQ(closed_form_valuation(params, {k, k - 1}), ValExt(q(1, 24)));
    EXPECT_EQ(closed_form_valuation(params, {k, k - 1}), oracle_valuation(params, {k, k - 1}));
  }
}

TEST(ClosedFormTest, DepthIgnoredWithoutCanonicalSubgroup) {
  CurveParams params(3, q(9, 10));
  EXPECT_EQ(closed_form_valuation(params, {3, 0}), closed_form_valuation(params, {3, 2}));
  EXPECT_EQ(oracle_valuation(params, {3, 3}), closed_form_valuation(params, {3, 0}));
}

TEST(ClosedFormTest, InvalidDescriptors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIo;
  };
  CurveParams canonical(2, q(1, 3));  // n = 1
  EXPECT_EQ(kind_of([&] { closed_form_valuation(canonical, {2, 5}); }), ErrorKind::kInvalidDescriptor);
  EXPECT_EQ(kind_of([&] { closed_form_valuation(canonical, {2, 2}); }), ErrorKind::kInvalidDescriptor);
  EXPECT_EQ(kind_of([&] { closed_form_valuation(canonical, {0, 0}); }), ErrorKind::kInvalidDescriptor);
  EXPECT_EQ(kind_of([&] { oracle_valuation(CurveParams(3, q(0)), {2, 1}); }), ErrorKind::kInvalidDescriptor);
  EXPECT_EQ(kind_of([&] { closed_form_valuation(CurveParams(3, q(1)), {2, 3}); }), ErrorKind::kInvalidDescriptor);
}

TEST(OracleTest, Examples) {
  EXPECT_EQ(oracle_valuation(CurveParams(2, q(1, 3)), {2, 0}), ValExt(q(1, 24)));
  EXPECT_EQ(oracle_valuation(CurveParams(2, q(1, 3)), {1, 1}), ValExt(q(2, 3)));
  EXPECT_EQ(oracle_valuation(CurveParams(3, q(0)), {2, 2}), ValExt(q(1, 6)));
}

TEST(OracleTest, TraceShowsBranchesTaken) {
  auto trace = oracle_trace(CurveParams(2, q(1, 3)), {2, 0});
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].valuation(), q(1, 6));
  EXPECT_EQ(trace[0].chosen, 1u);
  EXPECT_EQ(trace[1].segments.size(), 1u);
  EXPECT_EQ(trace[1].valuation(), q(1, 24));
}

TEST(ProfileTest, Examples) {
  auto profile = valuation_profile(CurveParams(2, q(1, 3)), 2);
  ASSERT_EQ(profile.size(), 2u);
  EXPECT_EQ(profile[0].desc, (TorsionDescriptor{2, 0}));
  EXPECT_EQ(profile[0].value, ValExt(q(1, 24)));
  EXPECT_EQ(profile[1].desc, (TorsionDescriptor{2, 1}));
  EXPECT_EQ(profile[1].value, ValExt(q(1, 6)));

  auto ordinary = valuation_profile(CurveParams(3, q(0)), 1);
  ASSERT_EQ(ordinary.size(), 1u);
  EXPECT_EQ(ordinary[0].desc, (TorsionDescriptor{1, 1}));
  EXPECT_EQ(ordinary[0].value, ValExt(q(1, 2)));

  auto supersingular = valuation_profile(CurveParams(2, q(9, 10)), 1);
  ASSERT_EQ(supersingular.size(), 1u);
  EXPECT_EQ(supersingular[0].desc, (TorsionDescriptor{1, 0}));
  EXPECT_EQ(supersingular[0].value, ValExt(q(1, 3)));
}

// Coarser grid than the acceptance suite; the full grid runs there.
TEST(TorsionProperty, OracleMatchesClosedForm) {
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& h : boundary_grid(p, 2)) {
      CurveParams params(p, h);
      for (int k = 1; k <= 4; ++k) {
        for (int a : admissible_depths(params, k)) {
          EXPECT_EQ(oracle_valuation(params, {k, a}), closed_form_valuation(params, {k, a}))
              << "p=" << p << " h=" << h.get_str() << " k=" << k << " a=" << a;
        }
      }
    }
  }
}

TEST(TorsionProperty, ValuationStrictlyIncreasesWithDepth) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (const auto& h : boundary_grid(p, 3)) {
      CurveParams params(p, h);
      if (params.reduction() != Reduction::kCanonical) continue;
      for (int k = 1; k <= 5; ++k) {
        auto profile = valuation_profile(params, k);
        for (std::size_t i = 1; i < profile.size(); ++i) EXPECT_LT(profile[i - 1].value, profile[i].value);
      }
    }
  }
}

TEST(TorsionProperty, LiftPolygonsCarryFullMultiplicity) {
  for (std::int64_t p : {2, 3, 5}) {
    for (const auto& h : boundary_grid(p, 2)) {
      CurveParams params(p, h);
      const Rational expected = params.reduction() == Reduction::kOrdinary ? Rational(p) : Rational(p * p);
      for (int k = 2; k <= 4; ++k) {
        for (int a : admissible_depths(params, k)) {
          auto trace = oracle_trace(params, {k, a});
          EXPECT_EQ(trace.front().polygon.finite_extent(), expected - 1);
          for (std::size_t i = 1; i < trace.size(); ++i) {
            EXPECT_EQ(trace[i].polygon.finite_extent(), expected);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace cansub
