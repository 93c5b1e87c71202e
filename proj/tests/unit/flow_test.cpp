#include "isochron/flow.hpp"

#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "isochron/errors.hpp"
#include "isochron/period_law.hpp"
#include "test_support.hpp"

namespace isochron {
namespace {

using testing::monomial;
using testing::poly;

constexpr double kPi = std::numbers::pi;

// Radius where the level curve of H(x,0) = x²/2 + a x^d through (r0,0) meets the
// negative axis, by bisection on the axis restriction.
double mirror_radius(double a, int d, double r0) {
  const double level = 0.5 * r0 * r0 + a * std::pow(r0, d);
  auto f = [&](double r) { return 0.5 * r * r + a * std::pow(-r, d) - level; };
  boost::math::tools::eps_tolerance<double> tol(60);
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::bisect(f, 0.5 * r0, 2.0 * r0, tol, iters);
  return 0.5 * (lo + hi);
}

TEST(HalfOrbit, LinearRotation) {
  const auto res = half_orbit(HomogeneousPoly::zero(3), Side::upper, 0.3);
  EXPECT_NEAR(res.r_end, 0.3, 1e-12);
  EXPECT_NEAR(res.time, kPi, 1e-10);
  EXPECT_FALSE(res.degraded);
}

TEST(HalfOrbit, ReturnsToMirrorRadius) {
  const auto x2y = half_orbit(monomial(3, 1), Side::upper, 0.2);
  EXPECT_NEAR(x2y.r_end, 0.2, 1e-10);
  const auto x3 = half_orbit(monomial(3, 0), Side::upper, 0.1);
  EXPECT_NEAR(x3.r_end, mirror_radius(1.0, 3, 0.1), 1e-10);
  const auto lower = half_orbit(monomial(3, 0), Side::lower, 0.1);
  EXPECT_NEAR(lower.r_end, mirror_radius(1.0, 3, 0.1), 1e-10);
}

TEST(HalfOrbit, EnergyAndReversibility) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testing::random_poly(rng, 3 + trial % 3, 1);
    const double r = 0.05;
    const auto fwd = axis_transit(p, r, 1.0);
    EXPECT_LE(fwd.energy_drift, 1e-10);
    const auto back = axis_transit(p, -fwd.r_end, -1.0);
    EXPECT_NEAR(back.r_end, r, 1e-10);
    EXPECT_NEAR(back.time, fwd.time, 1e-9);
  }
}

TEST(HalfOrbit, EscapesBeyondAnnulus) {
  EXPECT_THROW(half_orbit(monomial(3, 0), Side::upper, 0.5), EscapedAnnulus);
  EXPECT_THROW(half_orbit(monomial(3, 0), Side::upper, -0.1), std::invalid_argument);
}

TEST(CorrespondenceGap, Values) {
  const PiecewiseSystem odd(monomial(4, 1), monomial(2, 0));
  EXPECT_LE(std::abs(correspondence_gap(odd, 0.05)), 1e-10);
  const PiecewiseSystem zero(HomogeneousPoly::zero(3), HomogeneousPoly::zero(3));
  EXPECT_LE(std::abs(correspondence_gap(zero, 0.1)), 1e-12);
  const PiecewiseSystem skew(monomial(3, 0), HomogeneousPoly::zero(2));
  for (double r0 : {0.01, 0.05}) {
    const double gap = correspondence_gap(skew, r0);
    EXPECT_NEAR(gap, mirror_radius(1.0, 3, r0) - r0, 1e-10);
    EXPECT_GT(gap, 0.0);
  }
}

TEST(NumericPeriod, Examples) {
  const PiecewiseSystem zero(HomogeneousPoly::zero(3), HomogeneousPoly::zero(4));
  EXPECT_NEAR(numeric_period(zero, 0.2), 2.0 * kPi, 1e-10);
  const PiecewiseSystem linear(monomial(2, 0, make_rational(3, 2)), HomogeneousPoly::zero(2));
  for (double r0 : {0.01, 0.3, 2.0}) EXPECT_NEAR(numeric_period(linear, r0), 1.5 * kPi, 1e-9);
  EXPECT_THROW(numeric_period(PiecewiseSystem(monomial(3, 0), HomogeneousPoly::zero(3)), 0.1), NotACenter);
}

TEST(NumericPeriod, ApproachesLimit) {
  const PiecewiseSystem sys(monomial(3, 1), monomial(3, 3));
  double prev = std::abs(numeric_period(sys, 0.02) - 2.0 * kPi);
  for (double r0 : {0.01, 0.005, 0.0025}) {
    const double dev = std::abs(numeric_period(sys, r0) - 2.0 * kPi);
    EXPECT_NEAR(dev / prev, 0.5, 0.05);  // leading term is linear in r0
    prev = dev;
  }
}

TEST(Quadrature, AgreesWithOde) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    const auto p = testing::random_poly(rng, 3 + trial % 3, 2);
    const auto est = annulus_bound(p);
    const double r0 = std::min(0.5 * est.r0_limit, 0.2);
    for (Side side : {Side::upper, Side::lower}) {
      const double q = quadrature_period(p, arc_of(side), r0);
      const double ode = half_orbit(p, side, r0).time;
      EXPECT_NEAR(q, ode, 1e-9) << p.to_string() << " r0=" << r0;
    }
  }
  EXPECT_NEAR(quadrature_period(HomogeneousPoly::zero(3), ArcRange::upper, 0.4), kPi, 1e-13);
  EXPECT_NEAR(quadrature_period(monomial(4, 1), ArcRange::full, 0.1), smooth_period(monomial(4, 1), 0.1), 1e-9);
}

TEST(Quadrature, MatchesSeriesNearOrigin) {
  const auto p = monomial(3, 1);
  const auto series = half_period_series_r0(p, Side::upper, 12);
  EXPECT_NEAR(quadrature_period(p, ArcRange::upper, 0.01), series.evaluate(0.01), 1e-12);
}

TEST(Quadrature, OutsideAnnulusFails) {
  EXPECT_THROW(quadrature_period(monomial(3, 0), ArcRange::full, 0.5), RootBracketFailure);
}

TEST(Quadrature, GlobalCenterDecreases) {
  const auto p = poly(4, {1, 0, 0, 0, 1});  // x⁴ + y⁴ > 0
  double prev = quadrature_period(p, ArcRange::full, 0.1);
  for (double r0 : {0.3, 0.8, 2.0}) {
    const double t = quadrature_period(p, ArcRange::full, r0);
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(HMonotonicity, Checks) {
  const std::vector<double> grid{0.05, 0.1, 0.2, 0.3, 0.4};
  EXPECT_TRUE(h_monotonicity_check(monomial(3, 1), grid));
  EXPECT_TRUE(h_monotonicity_check(monomial(3, 0), std::vector<double>{0.05, 0.1, 0.15}));
  const auto bad = h_monotonicity_check(monomial(3, 0, -1), grid);
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.failure_r0.has_value());
  EXPECT_GE(*bad.failure_r0, 1.0 / 3.0);
  EXPECT_NEAR(annulus_bound(monomial(3, 0, -1)).r_star, 1.0 / 3.0, 1e-12);
}

}  // namespace
}  // namespace isochron
