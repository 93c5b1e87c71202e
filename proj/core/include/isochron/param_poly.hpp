#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "isochron/rational.hpp"

namespace isochron {

/// Polynomial in the degree parameter n with exact rational coefficients.
/// coeffs()[k] is the coefficient of n^k; trailing zeros are always trimmed.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(std::initializer_list<Rational> coeffs);
  explicit ParamPoly(std::vector<Rational> coeffs);
  ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// The polynomial "n".
  static ParamPoly n();

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& n) const;
  double evaluate(double n) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& s);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator*(ParamPoly a, const Rational& s) { return a *= s; }
  friend ParamPoly operator*(const Rational& s, ParamPoly a) { return a *= s; }
  ParamPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "3/2*n^2 + n - 1/8"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Generalized binomial C(top, k) = top (top-1) ... (top-k+1) / k! as a polynomial in n.
ParamPoly binomial(const ParamPoly& top, int k);

}  // namespace isochron
