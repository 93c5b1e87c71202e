#include "isochron/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isochron/errors.hpp"
#include "isochron/parallel.hpp"

namespace isochron {

const char* to_string(Monotonicity tag) {
  switch (tag) {
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::increasing_unbounded: return "increasing_unbounded";
    case Monotonicity::min_critical: return "min_critical";
    case Monotonicity::constant: return "constant";
    case Monotonicity::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// π / sqrt(det M) for H = xᵀ M x / 2: a linear center spends exactly half its
// period in each half-plane.
double linear_half_period(const HomogeneousPoly& p) {
  const double a = 1.0 + 2.0 * p.coeff(0).get_d();
  const double b = p.coeff(1).get_d();
  const double c = 1.0 + 2.0 * p.coeff(2).get_d();
  const double det = a * c - b * b;
  if (!(det > 0.0) || !(a > 0.0)) throw NotACenter("linear side is not a center");
  return std::numbers::pi / std::sqrt(det);
}

void require_center(const PiecewiseSystem& sys, const char* what) {
  const auto cls = classify(sys);
  if (!cls.is_center()) throw NotACenter(std::string(what) + ": " + cls.reason);
}

}  // namespace

double limit_period(const PiecewiseSystem& sys) {
  double total = 0.0;
  for (Side side : {Side::upper, Side::lower}) {
    const auto& p = sys.poly(side);
    total += (p.degree() == 2 && !p.is_zero()) ? linear_half_period(p) : std::numbers::pi;
  }
  return total;
}

std::optional<Witness> find_witness(const PiecewiseSystem& sys, double tol, double r_max, int budget,
                                    const FlowOptions& opts) {
  require_center(sys, "find_witness");
  const double base = limit_period(sys);
  double r = r_max * 1e-3;
  if (auto obstruction = first_obstruction(sys, 12)) {
    // Start where the predicted leading term is ten times the tolerance.
    const double mu = std::abs(obstruction->coefficient.to_double());
    r = std::pow(10.0 * tol / mu, 1.0 / obstruction->exponent);
  }
  r = std::min(r, r_max);
  for (int evals = 0; evals < budget; ++evals) {
    const double period = numeric_period(sys, r, opts);
    const double deviation = std::abs(period - base);
    if (deviation > tol) return Witness{r, period, deviation};
    if (r >= r_max) break;
    r = std::min(2.0 * r, r_max);
  }
  return std::nullopt;
}

double obstruction_ratio(const PiecewiseSystem& sys, const Obstruction& obstruction, double r0,
                         const FlowOptions& opts) {
  const double measured = numeric_period(sys, r0, opts) - limit_period(sys);
  return measured / (obstruction.coefficient.to_double() * std::pow(r0, obstruction.exponent));
}

double cross_validate(const PiecewiseSystem& sys, int order, std::span<const double> grid, const FlowOptions& opts) {
  const auto series = combined_period_series(sys, order);
  const auto deviations = parallel_map(grid.size(), [&](std::size_t i) {
    return std::abs(numeric_period(sys, grid[i], opts) - series.evaluate(grid[i]));
  });
  return deviations.empty() ? 0.0 : *std::max_element(deviations.begin(), deviations.end());
}

Monotonicity predict_monotonicity(const HomogeneousPoly& p) {
  if (p.degree() < 3) throw DegreeTooLow("monotonicity needs side degree >= 3");
  if (p.is_zero()) return Monotonicity::constant;
  const int n = p.degree() - 1;
  if (n % 2 == 0) return Monotonicity::increasing_unbounded;
  if (!annulus_bound(p).bounded()) return Monotonicity::decreasing;
  // Bounded annulus: an initially decreasing period must turn around.
  const auto series = full_period_series(p, 2);
  const auto& first = series.terms().begin()->second;
  return first.sign() < 0 ? Monotonicity::min_critical : Monotonicity::increasing_unbounded;
}

Monotonicity monotonicity_profile(const HomogeneousPoly& p, std::span<const double> grid) {
  if (p.degree() < 3) throw DegreeTooLow("monotonicity needs side degree >= 3");
  if (p.is_zero()) return Monotonicity::constant;
  std::vector<double> periods;
  periods.reserve(grid.size());
  for (double r0 : grid) {
    try {
      periods.push_back(quadrature_period(p, ArcRange::full, r0));
    } catch (const RootBracketFailure&) {
      break;
    }
  }
  if (periods.size() < 3) return Monotonicity::undetermined;
  const auto [lo, hi] = std::minmax_element(periods.begin(), periods.end());
  if (*hi - *lo <= 1e-10 * *hi) return Monotonicity::constant;

  constexpr double kNoise = 1e-13;
  std::vector<int> signs;
  for (std::size_t i = 1; i < periods.size(); ++i) {
    const double d = periods[i] - periods[i - 1];
    if (std::abs(d) <= kNoise * periods[i]) continue;
    const int s = d > 0 ? 1 : -1;
    if (signs.empty() || signs.back() != s) signs.push_back(s);
  }
  if (signs.size() == 1) return signs[0] < 0 ? Monotonicity::decreasing : Monotonicity::increasing_unbounded;
  if (signs.size() == 2 && signs[0] < 0) return Monotonicity::min_critical;
  return Monotonicity::undetermined;
}

Monotonicity monotonicity_profile(const PiecewiseSystem& sys, Side side, std::span<const double> grid) {
  return monotonicity_profile(sys.poly(side), grid);
}

std::vector<double> profile_grid(const HomogeneousPoly& p, int points, double fraction, double fallback) {
  double limit = fallback;
  if (p.degree() >= 3) {
    const auto est = annulus_bound(p);
    if (est.bounded()) limit = est.r0_limit;
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) grid.push_back(fraction * limit * i / points);
  return grid;
}

bool odd_moments_vanish(const HomogeneousPoly& p, Side side, int jmax) {
  for (int j = 1; j <= jmax; ++j) {
    if (!g_power_integral(p, 2 * j - 1, arc_of(side)).is_zero()) return false;
  }
  return true;
}

bool half_equals_half_full_check(const PiecewiseSystem& sys, Side side, std::span<const double> grid,
                                 double tolerance, const FlowOptions& opts) {
  const auto& p = sys.poly(side);
  const bool odd_exponent = sys.exponent(side) % 2 != 0;
  if (!odd_exponent && !odd_moments_vanish(p, side)) {
    throw HypothesisNotMet(std::string("side ") + to_string(side) +
                           " has an even exponent and a nonzero odd moment of g");
  }
  const auto ok = parallel_map(grid.size(), [&](std::size_t i) {
    const double half = half_orbit(p, side, grid[i], opts).time;
    const double full = smooth_period(p, grid[i], opts);
    return std::abs(half - 0.5 * full) <= tolerance ? 1 : 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](int v) { return v == 1; });
}

AnalysisReport analyze(const PiecewiseSystem& sys, const AnalysisOptions& options) {
  AnalysisReport report;
  report.classification = classify(sys);
  const double limit = common_r0_limit(sys);
  if (!(limit > 0.0)) {
    report.anomalies.push_back("a linear side is not a center; no periodic orbits near the origin");
    return report;
  }
  report.r_max = options.r_max > 0.0 ? options.r_max : 0.8 * std::min(limit, 1.0);

  if (!report.classification.is_center()) {
    constexpr int kGapSamples = 8;
    std::vector<double> radii;
    for (int i = 1; i <= kGapSamples; ++i) radii.push_back(report.r_max * i / kGapSamples);
    const auto gaps = parallel_map(radii.size(), [&](std::size_t i) {
      return GapSample{radii[i], correspondence_gap(sys, radii[i], options.flow)};
    });
    report.gaps = gaps;
    return report;
  }

  report.limit_period = limit_period(sys);
  try {
    report.series = combined_period_series(sys, options.order);
  } catch (const DegreeTooLow&) {
    // A nonzero linear side has an irrational constant half period; no exact series.
  }
  report.first_obstruction = first_obstruction(sys, options.order);

  for (Side side : {Side::upper, Side::lower}) {
    const auto& p = sys.poly(side);
    if (p.degree() < 3) continue;
    SideProfile profile{side, Monotonicity::undetermined, predict_monotonicity(p)};
    profile.measured = monotonicity_profile(p, profile_grid(p, 24));
    const bool consistent = profile.measured == profile.predicted ||
                            (profile.predicted == Monotonicity::min_critical &&
                             profile.measured == Monotonicity::decreasing);
    if (!consistent) {
      report.anomalies.push_back(std::string("monotonicity of the ") + to_string(side) + " side measured " +
                                 to_string(profile.measured) + ", predicted " + to_string(profile.predicted));
    }
    report.monotonicity.push_back(profile);
  }

  if (report.series) {
    std::vector<double> validation;
    for (int i = 1; i <= 8; ++i) validation.push_back(0.25 * report.r_max * i / 8);
    report.crosscheck = cross_validate(sys, options.order, validation, options.flow);
  }

  report.witness = find_witness(sys, options.tol, report.r_max, options.witness_budget, options.flow);
  const bool trivial = sys.upper().is_zero() && sys.lower().is_zero();
  if (!report.witness && !trivial) {
    std::vector<double> probe{0.1 * report.r_max, 0.4 * report.r_max, report.r_max};
    double spread = 0.0;
    for (double r : probe) spread = std::max(spread, std::abs(numeric_period(sys, r, options.flow) - report.limit_period));
    std::ostringstream msg;
    msg.precision(17);
    if (spread <= 1e-9) {
      msg << "isochronous behaviour measured: T(r0) = " << report.limit_period
          << " on every sampled radius (n = " << sys.n() << ", m = " << sys.m()
          << "); contradicts the claim that no such system is an isochronous Sigma-center";
    } else {
      msg << "no witness found within budget (max |T - T(0)| = " << spread << ")";
    }
    report.anomalies.push_back(msg.str());
  } else if (report.first_obstruction) {
    const int predicted = report.first_obstruction->coefficient.sign();
    const double measured = report.witness->period - report.limit_period;
    if ((measured > 0) != (predicted > 0)) {
      report.anomalies.push_back("witness deviation has the opposite sign of the first obstruction");
    }
  }
  return report;
}

}  // namespace isochron
