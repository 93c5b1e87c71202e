#include "isochron/flow.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "isochron/errors.hpp"

namespace isochron {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;
using Stepper = odeint::runge_kutta_fehlberg78<State>;

constexpr int kMaxRejections = 200;
constexpr long kMaxSteps = 2'000'000;

}  // namespace

HalfOrbitResult axis_transit(const HomogeneousPoly& p, double x_start, double time_sign, const FlowOptions& opts) {
  const auto field = [&](const State& s, State& ds, double /*t*/) {
    const auto f = side_field(p, s[0], s[1]);
    ds[0] = time_sign * f[0];
    ds[1] = time_sign * f[1];
  };

  State state{x_start, 0.0};
  State rate{};
  field(state, rate, 0.0);
  const double side_sign = rate[1] > 0.0 ? 1.0 : -1.0;
  if (rate[1] == 0.0 || (x_start > 0.0) != (time_sign * side_sign > 0.0)) {
    throw EscapedAnnulus("axis point x = " + std::to_string(x_start) +
                         " has no transversal crossing; it lies outside the period annulus");
  }

  const double h0 = hamiltonian(p, state[0], state[1]);
  const double energy_scale = std::max(std::abs(h0), std::numeric_limits<double>::min());
  const double escape_radius = opts.escape_factor * std::abs(x_start);

  auto controlled = odeint::make_controlled(opts.abs_tol, opts.rel_tol, Stepper());
  HalfOrbitResult result;
  double t = 0.0;
  double dt = 1e-2;
  State previous = state;
  double t_previous = 0.0;

  auto track_energy = [&](const State& s) {
    const double drift = std::abs(hamiltonian(p, s[0], s[1]) - h0) / energy_scale;
    result.energy_drift = std::max(result.energy_drift, drift);
  };

  for (;;) {
    previous = state;
    t_previous = t;
    int rejections = 0;
    while (controlled.try_step(field, state, t, dt) == odeint::fail) {
      if (++rejections > kMaxRejections || dt < 1e-14 * std::max(1.0, t)) {
        throw StepFailure("step size collapsed at t = " + std::to_string(t));
      }
    }
    ++result.steps;
    track_energy(state);
    if (side_sign * state[1] <= 0.0) break;
    if (t > opts.max_time || std::hypot(state[0], state[1]) > escape_radius || result.steps > kMaxSteps) {
      throw EscapedAnnulus("orbit from x = " + std::to_string(x_start) + " did not return to the axis");
    }
  }

  // Final stretch with y as the independent variable: (x, τ)' = (F_x / F_y, 1 / F_y).
  const auto henon = [&](const State& s, State& ds, double y) {
    const auto f = side_field(p, s[0], y);
    const double fy = time_sign * f[1];
    ds[0] = time_sign * f[0] / fy;
    ds[1] = 1.0 / fy;
  };
  State tail{previous[0], t_previous};
  const double y_from = previous[1];
  odeint::integrate_adaptive(odeint::make_controlled(opts.abs_tol, opts.rel_tol, Stepper()), henon, tail, y_from,
                             0.0, -y_from / 4.0);
  track_energy(State{tail[0], 0.0});

  result.r_end = std::abs(tail[0]);
  result.time = tail[1];
  result.degraded = result.energy_drift > opts.drift_bound;
  return result;
}

HalfOrbitResult half_orbit(const HomogeneousPoly& p, Side side, double r_start, const FlowOptions& opts) {
  if (!(r_start > 0.0)) throw std::invalid_argument("half_orbit: start radius must be positive");
  return axis_transit(p, r_start, side == Side::upper ? 1.0 : -1.0, opts);
}

HalfOrbitResult half_orbit(const PiecewiseSystem& sys, Side side, double r_start, const FlowOptions& opts) {
  return half_orbit(sys.poly(side), side, r_start, opts);
}

double correspondence_gap(const PiecewiseSystem& sys, double r0, const FlowOptions& opts) {
  return half_orbit(sys, Side::upper, r0, opts).r_end - half_orbit(sys, Side::lower, r0, opts).r_end;
}

double numeric_period(const PiecewiseSystem& sys, double r0, const FlowOptions& opts) {
  const auto cls = classify(sys);
  if (!cls.is_center()) throw NotACenter("numeric_period: " + cls.reason);
  return half_orbit(sys, Side::upper, r0, opts).time + half_orbit(sys, Side::lower, r0, opts).time;
}

double smooth_period(const HomogeneousPoly& p, double r0, const FlowOptions& opts) {
  return half_orbit(p, Side::upper, r0, opts).time + half_orbit(p, Side::lower, r0, opts).time;
}

double quadrature_period(const HomogeneousPoly& p, ArcRange range, double r0) {
  const int d = p.degree();
  const double a0 = p.axis_value().get_d();
  const double h2 = r0 * r0 + 2.0 * a0 * std::pow(r0, d);
  if (!(h2 > 0.0)) throw RootBracketFailure("quadrature_period: nonpositive level h^2 at r0 = " + std::to_string(r0));
  const double h = std::sqrt(h2);

  auto radius = [&](double g) {
    if (g == 0.0) return h;
    if (d == 2) {
      const double denom = 1.0 + 2.0 * g;
      if (!(denom > 0.0)) throw RootBracketFailure("quadrature_period: linear side is not a center");
      return h / std::sqrt(denom);
    }
    auto level = [&](double r) { return r * r + 2.0 * g * std::pow(r, d) - h2; };
    double lo = 0.0;
    double hi = h;
    if (g < 0.0) {
      // Root lies between h and the fold radius where 1 + d g r^{d-2} = 0.
      lo = h;
      hi = std::pow(-1.0 / (d * g), 1.0 / (d - 2));
      if (!(level(hi) > 0.0)) {
        throw RootBracketFailure("quadrature_period: level curve through r0 = " + std::to_string(r0) +
                                 " leaves the period annulus");
      }
    }
    const double f_lo = level(lo);
    const double f_hi = level(hi);
    // |g| near zero: the level sits at h up to rounding.
    if (f_lo >= 0.0) return lo;
    if (f_hi <= 0.0) return hi;
    std::uintmax_t iters = 100;
    const auto bracket = boost::math::tools::toms748_solve(level, lo, hi, f_lo, f_hi,
                                                           boost::math::tools::eps_tolerance<double>(), iters);
    return 0.5 * (bracket.first + bracket.second);
  };

  auto integrand = [&](double theta) {
    const double g = g_eval(p, theta);
    const double r = radius(g);
    return 1.0 / (1.0 + d * g * std::pow(r, d - 2));
  };

  double a = 0.0;
  double b = 2.0 * std::numbers::pi;
  if (range == ArcRange::upper) b = std::numbers::pi;
  if (range == ArcRange::lower) a = std::numbers::pi;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, a, b, 12, 1e-13);
}

double quadrature_period(const PiecewiseSystem& sys, Side side, double r0) {
  return quadrature_period(sys.poly(side), arc_of(side), r0);
}

MonotonicityCheck h_monotonicity_check(const HomogeneousPoly& p, std::span<const double> grid) {
  const int d = p.degree();
  const double a0 = p.axis_value().get_d();
  for (double r0 : grid) {
    const double h2 = r0 * r0 + 2.0 * a0 * std::pow(r0, d);
    const double numer = r0 + d * a0 * std::pow(r0, d - 1);
    if (!(h2 > 0.0) || !(numer > 0.0)) return {false, r0};
  }
  return {};
}

MonotonicityCheck h_monotonicity_check(const PiecewiseSystem& sys, Side side, std::span<const double> grid) {
  return h_monotonicity_check(sys.poly(side), grid);
}

}  // namespace isochron
