#include <gtest/gtest.h>

#include "cansub/curve_params.hpp"
#include "cansub/error.hpp"
#include "cansub/properness.hpp"
#include "oracles.hpp"

namespace cansub {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(CircleMatrixTest, Construction) {
  auto sys = circle_matrix(2);
  ASSERT_EQ(sys.matrix.rows(), 3u);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(sys.matrix(r, c), r == c ? 0 : 1);
  }
  EXPECT_EQ(circle_matrix(3).matrix.rows(), 4u);
  auto five = circle_matrix(5);
  for (std::size_t r = 0; r < 6; ++r) {
    Rational sum;
    for (std::size_t c = 0; c < 6; ++c) {
      sum += five.matrix(r, c);
      EXPECT_EQ(five.matrix(r, c), five.matrix(c, r));
    }
    EXPECT_EQ(sum, 5);
  }
  EXPECT_THROW(circle_matrix(6), Error);
}

TEST(InjectivityTest, Examples) {
  auto v2 = injectivity_verdict(circle_matrix(2));
  EXPECT_TRUE(v2.invertible);
  EXPECT_EQ(v2.determinant, 2);
  EXPECT_EQ(v2.kernel_dimension, 0u);
  EXPECT_EQ(injectivity_verdict(circle_matrix(3)).determinant, -3);
  EXPECT_EQ(abs(injectivity_verdict(circle_matrix(5)).determinant), 5);
  EXPECT_EQ(injectivity_verdict(circle_matrix(7)).determinant, -7);
}

TEST(InjectivityTest, MatchesLeibnizExpansion) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto size = static_cast<std::size_t>(p + 1);
    std::vector<std::vector<int>> m(size, std::vector<int>(size, 1));
    for (std::size_t i = 0; i < size; ++i) m[i][i] = 0;
    EXPECT_EQ(injectivity_verdict(circle_matrix(p)).determinant, Rational(testing::leibniz_determinant(m)));
  }
}

TEST(EliminationTest, GeneralRationalMatrices) {
  RationalMatrix m(3, 3);
  // [[1/2, 1, 0], [0, 2/3, 1], [1, 0, 1/4]] has det 1/2*(1/6) - 1*(-1) = 13/12
  m(0, 0) = q(1, 2);
  m(0, 1) = 1;
  m(1, 1) = q(2, 3);
  m(1, 2) = 1;
  m(2, 0) = 1;
  m(2, 2) = q(1, 4);
  EXPECT_EQ(fraction_free_eliminate(m).determinant, q(13, 12));

  RationalMatrix singular(3, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) singular(r, c) = static_cast<long>(r + c);
  }
  auto elim = fraction_free_eliminate(singular);
  EXPECT_EQ(elim.determinant, 0);
  EXPECT_EQ(elim.rank, 2u);
}

TEST(TranscriptTest, ReplaysToUnitVectors) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    auto sys = circle_matrix(p);
    auto transcripts = elimination_transcripts(sys);
    ASSERT_EQ(transcripts.size(), sys.matrix.rows());
    RationalMatrix stacked(sys.matrix.rows(), sys.matrix.cols());
    for (const auto& t : transcripts) {
      auto row = replay_transcript(sys, t);
      for (std::size_t c = 0; c < row.size(); ++c) stacked(t.target, c) = row[c];
    }
    RationalMatrix identity(sys.matrix.rows(), sys.matrix.cols());
    for (std::size_t i = 0; i < identity.rows(); ++i) identity(i, i) = 1;
    EXPECT_EQ(stacked, identity);
  }
}

TEST(TranscriptTest, FollowsSumScaleSubtract) {
  auto t = elimination_transcript(circle_matrix(3), 2);
  ASSERT_EQ(t.steps.size(), 3u);
  EXPECT_EQ(t.steps[0].kind, RowOperation::Kind::kSumAllRows);
  EXPECT_EQ(t.steps[1].kind, RowOperation::Kind::kScale);
  EXPECT_EQ(t.steps[1].factor, q(1, 3));
  EXPECT_EQ(t.steps[2].kind, RowOperation::Kind::kSubtractRow);
  EXPECT_EQ(t.steps[2].row, 2u);
  auto e2 = replay_transcript(circle_matrix(3), t);
  EXPECT_EQ(e2, (std::vector<Rational>{0, 0, 1, 0}));
  EXPECT_THROW(elimination_transcript(circle_matrix(3), 4), Error);
}

TEST(ExtensionPlanTest, Examples) {
  auto plan = extension_plan(2, q(1, 3));
  EXPECT_EQ(plan.steps, 1);
  EXPECT_EQ(plan.final_v, q(2, 3));
  EXPECT_EQ(extension_plan(2, q(2, 3)).steps, 0);
  auto longer = extension_plan(2, q(1, 48));
  EXPECT_EQ(longer.steps, 5);
  EXPECT_EQ(longer.final_v, q(2, 3));
  EXPECT_EQ(longer.orbit, (std::vector<Rational>{q(1, 48), q(1, 24), q(1, 12), q(1, 6), q(1, 3), q(2, 3)}));
  EXPECT_THROW(extension_plan(2, q(0)), Error);
}

TEST(ExtensionPlanTest, StepsAreMinimal) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int j = 1; j <= 50; ++j) {
      Rational start = make_rational(j, 97);
      auto plan = extension_plan(p, start);
      EXPECT_GE(plan.final_v, supersingular_threshold(p));
      if (plan.steps > 0) EXPECT_LT(plan.orbit[plan.orbit.size() - 2], supersingular_threshold(p));
    }
  }
}

}  // namespace
}  // namespace cansub
