#include "isochron/trigmoments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isochron {

const char* to_string(ArcRange range) {
  switch (range) {
    case ArcRange::full: return "full";
    case ArcRange::upper: return "upper";
    case ArcRange::lower: return "lower";
  }
  return "?";
}

const char* to_string(Side side) { return side == Side::upper ? "upper" : "lower"; }

// ---------------------------------------------------------------------------
// TrigValue

TrigValue::TrigValue(Rational rational, Rational pi_multiple)
    : rat_(std::move(rational)), pi_(std::move(pi_multiple)) {
  rat_.canonicalize();
  pi_.canonicalize();
}

TrigValue& TrigValue::operator+=(const TrigValue& o) {
  rat_ += o.rat_;
  pi_ += o.pi_;
  return *this;
}

TrigValue& TrigValue::operator-=(const TrigValue& o) {
  rat_ -= o.rat_;
  pi_ -= o.pi_;
  return *this;
}

TrigValue& TrigValue::operator*=(const Rational& s) {
  rat_ *= s;
  pi_ *= s;
  return *this;
}

TrigValue& TrigValue::operator/=(const Rational& s) {
  if (sgn(s) == 0) throw std::domain_error("TrigValue: division by zero");
  rat_ /= s;
  pi_ /= s;
  return *this;
}

int TrigValue::sign() const {
  if (sgn(pi_) == 0) return sgn(rat_);
  if (sgn(rat_) == 0) return sgn(pi_);
  if (sgn(rat_) == sgn(pi_)) return sgn(rat_);
  // Opposite signs: compare |rat| against |pi_|·π with a wide float.
  static const mpf_class kPi("3.14159265358979323846264338327950288419716939937510582097494459230781640628620899863",
                             512);
  mpf_class value(rat_, 512);
  value += mpf_class(pi_, 512) * kPi;
  return sgn(value);
}

double TrigValue::to_double() const { return rat_.get_d() + pi_.get_d() * std::numbers::pi; }

std::string TrigValue::to_string() const {
  std::string out = rat_.get_str();
  if (sgn(pi_) < 0) {
    out += " - " + Rational(-pi_).get_str() + "*pi";
  } else {
    out += " + " + pi_.get_str() + "*pi";
  }
  return out;
}

// ---------------------------------------------------------------------------
// HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 2) throw std::invalid_argument("HomogeneousPoly: degree must be >= 2");
  if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1) {
    throw std::invalid_argument("HomogeneousPoly: expected degree+1 coefficients");
  }
  zero_ = true;
  approx_.reserve(coeffs_.size());
  for (auto& c : coeffs_) {
    c.canonicalize();
    if (sgn(c) != 0) zero_ = false;
    approx_.push_back(c.get_d());
  }
}

HomogeneousPoly HomogeneousPoly::zero(int degree) {
  return HomogeneousPoly(degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1, Rational(0)));
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& s) const {
  auto c = coeffs_;
  for (auto& v : c) v *= s;
  return HomogeneousPoly(degree_, std::move(c));
}

HomogeneousPoly HomogeneousPoly::half_turn() const {
  return degree_ % 2 == 0 ? *this : scaled(-1);
}

std::vector<Rational> HomogeneousPoly::power_coeffs(int j) const {
  if (j < 0) throw std::invalid_argument("power_coeffs: negative exponent");
  std::vector<Rational> acc{Rational(1)};
  for (int k = 0; k < j; ++k) {
    std::vector<Rational> next(acc.size() + coeffs_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (sgn(acc[a]) == 0) continue;
      for (std::size_t b = 0; b < coeffs_.size(); ++b) {
        if (sgn(coeffs_[b]) == 0) continue;
        next[a + b] += acc[a] * coeffs_[b];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

double HomogeneousPoly::eval(double x, double y) const {
  // Σ c_i x^{d-i} y^i by Horner in t = y/x is unstable near x = 0; use explicit powers.
  double sum = 0.0;
  double ypow = 1.0;
  for (int i = 0; i <= degree_; ++i) {
    sum += approx_[static_cast<std::size_t>(i)] * std::pow(x, degree_ - i) * ypow;
    ypow *= y;
  }
  return sum;
}

double HomogeneousPoly::d_dx(double x, double y) const {
  double sum = 0.0;
  double ypow = 1.0;
  for (int i = 0; i < degree_; ++i) {
    sum += approx_[static_cast<std::size_t>(i)] * (degree_ - i) * std::pow(x, degree_ - i - 1) * ypow;
    ypow *= y;
  }
  return sum;
}

double HomogeneousPoly::d_dy(double x, double y) const {
  double sum = 0.0;
  double ypow = 1.0;  // y^{i-1}
  for (int i = 1; i <= degree_; ++i) {
    sum += approx_[static_cast<std::size_t>(i)] * i * std::pow(x, degree_ - i) * ypow;
    ypow *= y;
  }
  return sum;
}

std::string HomogeneousPoly::to_string() const {
  if (zero_) return "0";
  std::string out;
  for (int i = 0; i <= degree_; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Rational mag = abs(c);
    const int px = degree_ - i;
    const int py = i;
    if (mag != 1) out += mag.get_str() + "*";
    std::string mono;
    if (px > 0) mono += px == 1 ? "x" : "x^" + std::to_string(px);
    if (py > 0) mono += (mono.empty() ? "" : "*") + (py == 1 ? std::string("y") : "y^" + std::to_string(py));
    out += mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moments

namespace {

// ∫_0^{2π} cos^a sin^b for a, b both even.
Rational full_even_moment_over_pi(int a, int b) {
  Rational value = 2;  // ∫ 1 = 2π
  for (int k = 2; k <= a; k += 2) value *= Rational(k - 1, k);
  for (int k = 2; k <= b; k += 2) value *= Rational(k - 1, a + k);
  value.canonicalize();
  return value;
}

// ∫_0^π cos^a sin^b for a even and b odd, by the recurrence on b.
Rational upper_odd_sin_moment(int a, int b) {
  Rational value(2, a + 1);  // b = 1: ∫_0^π cos^a sin = 2/(a+1)
  for (int k = 3; k <= b; k += 2) value *= Rational(k - 1, a + k);
  value.canonicalize();
  return value;
}

}  // namespace

TrigValue trig_moment(int a, int b, ArcRange range) {
  if (a < 0 || b < 0) throw std::invalid_argument("trig_moment: negative exponent");
  const bool a_odd = a % 2 != 0;
  const bool b_odd = b % 2 != 0;
  if (range == ArcRange::full) {
    if (a_odd || b_odd) return TrigValue();
    return TrigValue::pi(full_even_moment_over_pi(a, b));
  }
  // θ ↦ π-θ (upper) and θ ↦ 3π-θ (lower) flip the sign of cos only.
  if (a_odd) return TrigValue();
  if (!b_odd) return TrigValue::pi(full_even_moment_over_pi(a, b) / 2);
  Rational upper = upper_odd_sin_moment(a, b);
  return range == ArcRange::upper ? TrigValue(upper) : TrigValue(-upper);
}

TrigValue g_power_integral(const HomogeneousPoly& p, int j, ArcRange range) {
  if (j < 0) throw std::invalid_argument("g_power_integral: negative power");
  const auto coeffs = p.power_coeffs(j);
  const int total = p.degree() * j;
  TrigValue sum;
  for (int i = 0; i <= total; ++i) {
    const Rational& c = coeffs[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    sum += trig_moment(total - i, i, range) * c;
  }
  return sum;
}

double g_eval(const HomogeneousPoly& p, double theta) { return p.eval(std::cos(theta), std::sin(theta)); }

}  // namespace isochron
