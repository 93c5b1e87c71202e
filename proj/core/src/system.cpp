#include "isochron/system.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "isochron/errors.hpp"

namespace isochron {

const char* to_string(Verdict verdict) {
  return verdict == Verdict::sigma_center ? "SigmaCenter" : "NotCenter";
}

const char* to_string(CenterCase c) {
  switch (c) {
    case CenterCase::I: return "I";
    case CenterCase::II: return "II";
    case CenterCase::III: return "III";
    case CenterCase::IV: return "IV";
    case CenterCase::V: return "V";
    case CenterCase::none: return "none";
  }
  return "?";
}

namespace {

CenterClass center(CenterCase c, std::string reason) {
  return {Verdict::sigma_center, c, std::move(reason)};
}

CenterClass not_center(std::string reason) { return {Verdict::not_center, CenterCase::none, std::move(reason)}; }

}  // namespace

CenterClass classify(const PiecewiseSystem& sys) {
  const int n = sys.n();
  const int m = sys.m();
  const bool n_odd = n % 2 != 0;
  const bool m_odd = m % 2 != 0;
  const Rational& ap = sys.a0_plus();
  const Rational& am = sys.a0_minus();

  if (n_odd && m_odd) return center(CenterCase::I, "n and m odd");
  if (!n_odd && m_odd) {
    if (sgn(ap) == 0) return center(CenterCase::II, "n even, m odd, a0+ = 0");
    return not_center("n even and m odd require a0+ = 0, but a0+ = " + to_string(ap));
  }
  if (n_odd && !m_odd) {
    if (sgn(am) == 0) return center(CenterCase::III, "n odd, m even, a0- = 0");
    return not_center("n odd and m even require a0- = 0, but a0- = " + to_string(am));
  }
  if (n != m) {
    if (sgn(ap) == 0 && sgn(am) == 0) return center(CenterCase::IV, "n != m even, a0+ = a0- = 0");
    return not_center("n != m even require a0+ = a0- = 0, but a0+ = " + to_string(ap) + ", a0- = " + to_string(am));
  }
  if (ap == am) return center(CenterCase::V, "n = m even, a0+ = a0-");
  return not_center("n = m even require a0+ = a0-, but a0+ = " + to_string(ap) + ", a0- = " + to_string(am));
}

PiecewiseSystem rotate_half_turn(const PiecewiseSystem& sys) {
  return PiecewiseSystem(sys.lower().half_turn(), sys.upper().half_turn());
}

PiecewiseSystem normalize(const PiecewiseSystem& sys) {
  return sys.m() > sys.n() ? rotate_half_turn(sys) : sys;
}

double hamiltonian(const HomogeneousPoly& p, double x, double y) { return 0.5 * (x * x + y * y) + p.eval(x, y); }

double hamiltonian(const PiecewiseSystem& sys, Side side, double x, double y) {
  return hamiltonian(sys.poly(side), x, y);
}

std::array<double, 2> side_field(const HomogeneousPoly& p, double x, double y) {
  return {-(y + p.d_dy(x, y)), x + p.d_dx(x, y)};
}

std::array<double, 2> vector_field(const PiecewiseSystem& sys, double x, double y) {
  return side_field(y >= 0.0 ? sys.upper() : sys.lower(), x, y);
}

bool AnnulusEstimate::bounded() const noexcept { return std::isfinite(r_star); }

std::pair<double, double> max_negative_g(const HomogeneousPoly& p) {
  constexpr int kSamples = 4096;
  const double step = 2.0 * std::numbers::pi / kSamples;
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSamples; ++i) {
    const double v = -g_eval(p, i * step);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double center_theta = best * step;
  auto neg = [&](double theta) { return g_eval(p, theta); };  // minimize g
  const auto [theta, g_min] = boost::math::tools::brent_find_minima(
      neg, center_theta - step, center_theta + step, std::numeric_limits<double>::digits / 2 + 2);
  if (-g_min > best_value) return {-g_min, std::fmod(theta + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi)};
  return {best_value, center_theta};
}

AnnulusEstimate annulus_bound(const HomogeneousPoly& p, Side side) {
  const int d = p.degree();
  if (d < 3) throw DegreeTooLow("annulus_bound: degree-2 side is linear; its annulus is unbounded or empty");
  AnnulusEstimate est;
  est.side = side;
  constexpr double inf = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c.get_d()));
  const auto [max_neg, theta] = max_negative_g(p);
  if (p.is_zero() || max_neg <= 1e-14 * scale) {
    est.r_star = inf;
    est.r0_limit = inf;
    return est;
  }
  est.theta_star = theta;
  est.r_star = std::pow(d * max_neg, -1.0 / (d - 2));
  const double hc2 = est.r_star * est.r_star * (d - 2) / d;
  const double a0 = p.axis_value().get_d();
  auto axis_level = [&](double r0) { return r0 * r0 + 2.0 * a0 * std::pow(r0, d) - hc2; };
  const double at_edge = axis_level(est.r_star);
  if (at_edge <= 0.0) {
    est.r0_limit = est.r_star;
    return est;
  }
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(
      axis_level, 0.0, est.r_star, -hc2, at_edge, boost::math::tools::eps_tolerance<double>(50), iters);
  est.r0_limit = 0.5 * (bracket.first + bracket.second);
  return est;
}

AnnulusEstimate annulus_bound(const PiecewiseSystem& sys, Side side) { return annulus_bound(sys.poly(side), side); }

double common_r0_limit(const PiecewiseSystem& sys) {
  double limit = std::numeric_limits<double>::infinity();
  for (Side side : {Side::upper, Side::lower}) {
    const auto& p = sys.poly(side);
    if (p.degree() == 2) {
      // Linear side: a global center iff 1 + 2g > 0 on the circle.
      if (!p.is_zero() && 1.0 - 2.0 * max_negative_g(p).first <= 0.0) return 0.0;
      continue;
    }
    limit = std::min(limit, annulus_bound(p, side).r0_limit);
  }
  return limit;
}

}  // namespace isochron
