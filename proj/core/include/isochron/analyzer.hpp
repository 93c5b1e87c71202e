#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isochron/flow.hpp"
#include "isochron/period_law.hpp"
#include "isochron/system.hpp"

namespace isochron {

struct Witness {
  double r0 = 0.0;
  double period = 0.0;
  /// |T(r0) - T(0)|.
  double deviation = 0.0;
};

/// Limit of T(r₀) as r₀ → 0: π per side of degree >= 3, the exact (constant)
/// linear half period for a degree-2 side.
double limit_period(const PiecewiseSystem& sys);

/// Series-guided search for a radius where the measured period departs from
/// its limit by more than tol. Evaluates at most `budget` radii in (0, r_max].
std::optional<Witness> find_witness(const PiecewiseSystem& sys, double tol, double r_max, int budget,
                                    const FlowOptions& opts = {});

/// (T(r0) - T(0)) / (μ r0^e) for the given obstruction.
double obstruction_ratio(const PiecewiseSystem& sys, const Obstruction& obstruction, double r0,
                         const FlowOptions& opts = {});

/// max over the grid of |numeric_period - combined series truncated at `order`|.
double cross_validate(const PiecewiseSystem& sys, int order, std::span<const double> grid,
                      const FlowOptions& opts = {});

enum class Monotonicity { decreasing, increasing_unbounded, min_critical, constant, undetermined };
const char* to_string(Monotonicity tag);

/// Tag predicted from g's sign pattern and, for odd n with g < 0 somewhere,
/// the sign of the first nonzero whole-plane series coefficient.
Monotonicity predict_monotonicity(const HomogeneousPoly& p);

/// Shape of the sampled whole-plane period of the smooth system of p.
Monotonicity monotonicity_profile(const HomogeneousPoly& p, std::span<const double> grid);
Monotonicity monotonicity_profile(const PiecewiseSystem& sys, Side side, std::span<const double> grid);

/// Radii spread over (0, fraction · r0_limit] for profiling one side; uses
/// `fallback` as the limit for unbounded annuli.
std::vector<double> profile_grid(const HomogeneousPoly& p, int points, double fraction = 0.98, double fallback = 1.0);

/// True iff every odd moment of g over the side's half circle vanishes, checked exactly up to jmax.
bool odd_moments_vanish(const HomogeneousPoly& p, Side side, int jmax = 12);

/// |T_π,numeric - T_full/2| <= tolerance on the grid. Throws HypothesisNotMet
/// when the side exponent is even and some odd moment is nonzero.
bool half_equals_half_full_check(const PiecewiseSystem& sys, Side side, std::span<const double> grid,
                                 double tolerance = 1e-8, const FlowOptions& opts = {});

struct GapSample {
  double r0 = 0.0;
  double gap = 0.0;
};

struct SideProfile {
  Side side = Side::upper;
  Monotonicity measured = Monotonicity::undetermined;
  Monotonicity predicted = Monotonicity::undetermined;
};

struct AnalysisOptions {
  int order = 8;
  /// Largest sampled radius; 0 selects 0.8 of the common annulus radius.
  double r_max = 0.0;
  int samples = 64;
  double tol = 1e-6;
  int witness_budget = 64;
  FlowOptions flow;
};

struct AnalysisReport {
  CenterClass classification;
  std::optional<PeriodSeries> series;
  std::optional<Obstruction> first_obstruction;
  std::optional<Witness> witness;
  double limit_period = 0.0;
  double r_max = 0.0;
  std::vector<SideProfile> monotonicity;
  std::optional<double> crosscheck;
  std::vector<GapSample> gaps;
  std::vector<std::string> anomalies;
};

/// classify → series → monotonicity → cross-validation → witness search.
AnalysisReport analyze(const PiecewiseSystem& sys, const AnalysisOptions& options);

}  // namespace isochron
