#pragma once

#include <span>
#include <string>
#include <vector>

#include "isochron/rational.hpp"

namespace isochron {

/// Integration range on the unit circle: [0,2π], [0,π] or [π,2π].
enum class ArcRange { full, upper, lower };

/// Half-plane of a piecewise system; upper is y >= 0.
enum class Side { upper, lower };

constexpr ArcRange arc_of(Side side) { return side == Side::upper ? ArcRange::upper : ArcRange::lower; }

const char* to_string(ArcRange range);
const char* to_string(Side side);

/// Exact number rat + pi_mult * π.
///
/// Products of two TrigValues are intentionally absent: every quantity in the
/// moment algebra is a rational linear combination of moments, so π² never
/// appears.
class TrigValue {
 public:
  TrigValue() = default;
  explicit TrigValue(Rational rational, Rational pi_multiple = 0);

  static TrigValue pi(const Rational& multiple = 1) { return TrigValue(0, multiple); }

  const Rational& rational_part() const noexcept { return rat_; }
  const Rational& pi_part() const noexcept { return pi_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(pi_) == 0; }
  /// Sign of the real value (-1, 0, +1), decided exactly when one part vanishes.
  int sign() const;
  double to_double() const;

  TrigValue operator-() const { return TrigValue(-rat_, -pi_); }
  TrigValue& operator+=(const TrigValue& o);
  TrigValue& operator-=(const TrigValue& o);
  TrigValue& operator*=(const Rational& s);
  TrigValue& operator/=(const Rational& s);

  friend TrigValue operator+(TrigValue a, const TrigValue& b) { return a += b; }
  friend TrigValue operator-(TrigValue a, const TrigValue& b) { return a -= b; }
  friend TrigValue operator*(TrigValue a, const Rational& s) { return a *= s; }
  friend TrigValue operator*(const Rational& s, TrigValue a) { return a *= s; }
  friend TrigValue operator/(TrigValue a, const Rational& s) { return a /= s; }
  friend bool operator==(const TrigValue& a, const TrigValue& b) { return a.rat_ == b.rat_ && a.pi_ == b.pi_; }

  /// Symbolic form "p/q + r/s*pi".
  std::string to_string() const;

 private:
  Rational rat_ = 0;
  Rational pi_ = 0;
};

/// Homogeneous polynomial H_d(x,y) = Σ coeffs[i] x^{d-i} y^i with exact coefficients.
class HomogeneousPoly {
 public:
  HomogeneousPoly(int degree, std::vector<Rational> coeffs);
  static HomogeneousPoly zero(int degree);

  int degree() const noexcept { return degree_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  /// H(1,0): the value a₀ = g(0) of the side using this polynomial.
  const Rational& axis_value() const { return coeffs_.front(); }
  bool is_zero() const { return zero_; }

  HomogeneousPoly scaled(const Rational& s) const;
  /// p(-x,-y); every coefficient gains the factor (-1)^d.
  HomogeneousPoly half_turn() const;
  /// Coefficients of p^j (homogeneous of degree j*d), same indexing convention.
  std::vector<Rational> power_coeffs(int j) const;

  double eval(double x, double y) const;
  double d_dx(double x, double y) const;
  double d_dy(double x, double y) const;

  std::string to_string() const;

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_;
  std::vector<Rational> coeffs_;
  std::vector<double> approx_;
  bool zero_;
};

/// Exact ∫ cos^a θ sin^b θ dθ over the given range.
TrigValue trig_moment(int a, int b, ArcRange range);

/// Exact ∫ g^j dθ over the given range, g(θ) = p(cos θ, sin θ).
TrigValue g_power_integral(const HomogeneousPoly& p, int j, ArcRange range);

/// Floating evaluation of g(θ) = p(cos θ, sin θ).
double g_eval(const HomogeneousPoly& p, double theta);

}  // namespace isochron
