#include "isochron/analyzer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isochron/errors.hpp"
#include "test_support.hpp"

namespace isochron {
namespace {

using testing::monomial;
using testing::poly;

constexpr double kPi = std::numbers::pi;

const PiecewiseSystem kCaseV(monomial(3, 1), monomial(3, 3));

TEST(LimitPeriod, Values) {
  EXPECT_DOUBLE_EQ(limit_period(kCaseV), 2.0 * kPi);
  const PiecewiseSystem linear(monomial(2, 0, make_rational(3, 2)), HomogeneousPoly::zero(2));
  EXPECT_NEAR(limit_period(linear), 1.5 * kPi, 1e-15);
  const PiecewiseSystem mixed(monomial(4, 1), monomial(2, 1, make_rational(1, 4)));  // det(I + 2Q) = 15/16
  EXPECT_NEAR(limit_period(mixed), kPi + kPi / std::sqrt(15.0 / 16.0), 1e-12);
}

TEST(FindWitness, CaseV) {
  const auto w = find_witness(kCaseV, 1e-6, 0.2, 64);
  ASSERT_TRUE(w.has_value());
  EXPECT_GT(w->deviation, 1e-6);
  EXPECT_LE(w->r0, 0.2);
  EXPECT_NEAR(w->deviation, std::abs(w->period - 2.0 * kPi), 1e-15);
}

TEST(FindWitness, NoneForIsochronousSystems) {
  const PiecewiseSystem zero(HomogeneousPoly::zero(3), HomogeneousPoly::zero(5));
  EXPECT_FALSE(find_witness(zero, 1e-6, 0.5, 16));
  const PiecewiseSystem linear(monomial(2, 0, make_rational(3, 2)), HomogeneousPoly::zero(2));
  EXPECT_FALSE(find_witness(linear, 1e-6, 0.5, 16));
  EXPECT_THROW(find_witness(PiecewiseSystem(monomial(3, 0), HomogeneousPoly::zero(3)), 1e-6, 0.1, 8), NotACenter);
}

TEST(ObstructionRatio, TendsToOne) {
  const auto ob = first_obstruction(kCaseV, 8);
  ASSERT_TRUE(ob.has_value());
  EXPECT_NEAR(obstruction_ratio(kCaseV, *ob, 1e-3), 1.0, 0.05);
  const PiecewiseSystem tuned(monomial(3, 1), monomial(3, 3, make_rational(1, 2)));
  const auto ob2 = first_obstruction(tuned, 8);
  ASSERT_TRUE(ob2.has_value());
  EXPECT_NEAR(obstruction_ratio(tuned, *ob2, 1e-3), 1.0, 0.05);
}

TEST(CrossValidate, Convergence) {
  const PiecewiseSystem zero(HomogeneousPoly::zero(3), HomogeneousPoly::zero(3));
  EXPECT_LE(cross_validate(zero, 8, std::vector<double>{0.1, 0.3}), 1e-12);
  std::vector<double> grid;
  for (int i = 1; i <= 8; ++i) grid.push_back(0.05 * i / 8.0);
  EXPECT_LE(cross_validate(kCaseV, 16, grid), 1e-8);
  const double coarse = cross_validate(kCaseV, 6, std::vector<double>{0.1});
  const double fine = cross_validate(kCaseV, 6, std::vector<double>{0.05});
  EXPECT_GE(coarse / fine, std::pow(2.0, 6));
}

TEST(Monotonicity, Predictions) {
  EXPECT_EQ(predict_monotonicity(HomogeneousPoly::zero(3)), Monotonicity::constant);
  EXPECT_EQ(predict_monotonicity(monomial(3, 1)), Monotonicity::increasing_unbounded);
  EXPECT_EQ(predict_monotonicity(monomial(4, 2)), Monotonicity::decreasing);
  EXPECT_EQ(predict_monotonicity(poly(4, {1, 0, 0, 0, make_rational(-1, 2)})), Monotonicity::min_critical);
  EXPECT_EQ(predict_monotonicity(poly(4, {-1, 0, 0, 0, make_rational(1, 2)})), Monotonicity::increasing_unbounded);
  EXPECT_STREQ(to_string(Monotonicity::min_critical), "min_critical");
}

TEST(Monotonicity, MeasuredProfilesMatchPredictions) {
  for (const auto& p : {monomial(4, 2), monomial(3, 1), monomial(5, 0), poly(4, {-1, 0, 0, 0, make_rational(1, 2)})}) {
    const auto grid = profile_grid(p, 24);
    EXPECT_EQ(monotonicity_profile(p, grid), predict_monotonicity(p)) << p.to_string();
  }
  EXPECT_EQ(monotonicity_profile(HomogeneousPoly::zero(4), std::vector<double>{0.1, 0.2, 0.3}), Monotonicity::constant);
}

TEST(Monotonicity, MinCriticalProfile) {
  const auto p = poly(4, {1, 0, 0, 0, make_rational(-1, 2)});
  EXPECT_EQ(monotonicity_profile(p, profile_grid(p, 24)), Monotonicity::min_critical);
}

TEST(HalfFullCheck, Hypotheses) {
  const std::vector<double> grid{0.05, 0.1, 0.2};
  const PiecewiseSystem odd(poly(4, {1, -1, 2, 0, 1}), monomial(4, 2));
  EXPECT_TRUE(half_equals_half_full_check(odd, Side::upper, grid));
  EXPECT_TRUE(odd_moments_vanish(monomial(3, 0), Side::upper));
  const PiecewiseSystem cubic(monomial(3, 0), monomial(3, 0));
  EXPECT_TRUE(half_equals_half_full_check(cubic, Side::upper, std::vector<double>{0.05, 0.1}));
  EXPECT_FALSE(odd_moments_vanish(monomial(3, 1), Side::upper));
  EXPECT_THROW(half_equals_half_full_check(kCaseV, Side::upper, grid), HypothesisNotMet);
}

TEST(Analyze, CenterReport) {
  AnalysisOptions opts;
  opts.r_max = 0.12;
  const auto report = analyze(kCaseV, opts);
  EXPECT_TRUE(report.classification.is_center());
  ASSERT_TRUE(report.series.has_value());
  ASSERT_TRUE(report.witness.has_value());
  ASSERT_TRUE(report.first_obstruction.has_value());
  EXPECT_EQ(report.first_obstruction->exponent, 1);
  ASSERT_TRUE(report.crosscheck.has_value());
  EXPECT_LE(*report.crosscheck, 1e-6);
  EXPECT_EQ(report.monotonicity.size(), 2u);
  EXPECT_TRUE(report.anomalies.empty());
  EXPECT_TRUE(report.gaps.empty());
}

TEST(Analyze, NonCenterReportsGaps) {
  const auto report = analyze(PiecewiseSystem(monomial(3, 0), HomogeneousPoly::zero(3)), AnalysisOptions{});
  EXPECT_FALSE(report.classification.is_center());
  EXPECT_FALSE(report.series.has_value());
  EXPECT_FALSE(report.witness.has_value());
  ASSERT_EQ(report.gaps.size(), 8u);
  for (const auto& g : report.gaps) EXPECT_GT(g.gap, 0.0);
}

TEST(Analyze, LinearIsochronousFlagsAnomaly) {
  AnalysisOptions opts;
  opts.r_max = 0.5;
  opts.witness_budget = 8;
  const PiecewiseSystem linear(monomial(2, 0, make_rational(3, 2)), HomogeneousPoly::zero(2));
  const auto report = analyze(linear, opts);
  EXPECT_FALSE(report.witness.has_value());
  EXPECT_FALSE(report.anomalies.empty());
}

}  // namespace
}  // namespace isochron
