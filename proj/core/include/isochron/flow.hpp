#pragma once

#include <optional>
#include <span>

#include "isochron/system.hpp"

namespace isochron {

struct FlowOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  /// Give up when the elapsed time exceeds this many units.
  double max_time = 1e3;
  /// Relative energy drift above this marks the result degraded.
  double drift_bound = 1e-10;
  /// Escape when |(x,y)| exceeds this multiple of the start radius.
  double escape_factor = 1e3;
};

/// Result of one passage between the two rays of the switching line.
struct HalfOrbitResult {
  double r_end = 0.0;
  double time = 0.0;
  /// max |H - H₀| / |H₀| over accepted steps.
  double energy_drift = 0.0;
  long steps = 0;
  bool degraded = false;
};

/// Integrates the smooth field of p from (x_start, 0) with time running in
/// direction time_sign (+1 or -1) until y returns to zero. The crossing is
/// landed exactly on y = 0 by switching the independent variable to y for the
/// final stretch. r_end is |x| at the crossing; time is a positive duration.
HalfOrbitResult axis_transit(const HomogeneousPoly& p, double x_start, double time_sign, const FlowOptions& opts = {});

/// φ₊ (upper: forward from (r,0) through y > 0) or φ₋ (lower: the X₋ arc
/// through y < 0 that ends at (r,0), integrated backward).
HalfOrbitResult half_orbit(const HomogeneousPoly& p, Side side, double r_start, const FlowOptions& opts = {});
HalfOrbitResult half_orbit(const PiecewiseSystem& sys, Side side, double r_start, const FlowOptions& opts = {});

/// r₁₊ - r₁₋ at axis radius r0.
double correspondence_gap(const PiecewiseSystem& sys, double r0, const FlowOptions& opts = {});

/// Sum of the two half-orbit times. Throws NotACenter for non-centers.
double numeric_period(const PiecewiseSystem& sys, double r0, const FlowOptions& opts = {});

/// Whole-plane period of the smooth system of p through (r0, 0), by ODE.
double smooth_period(const HomogeneousPoly& p, double r0, const FlowOptions& opts = {});

/// ∫ dθ / (1 + d g(θ) r(θ)^{d-2}) over the range, with r(θ) solved on the
/// level curve through (r0, 0) at every node.
double quadrature_period(const HomogeneousPoly& p, ArcRange range, double r0);
double quadrature_period(const PiecewiseSystem& sys, Side side, double r0);

struct MonotonicityCheck {
  bool ok = true;
  std::optional<double> failure_r0;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks dh/dr₀ = (r₀ + d a₀ r₀^{d-1}) / h > 0 along the grid.
MonotonicityCheck h_monotonicity_check(const HomogeneousPoly& p, std::span<const double> grid);
MonotonicityCheck h_monotonicity_check(const PiecewiseSystem& sys, Side side, std::span<const double> grid);

}  // namespace isochron
