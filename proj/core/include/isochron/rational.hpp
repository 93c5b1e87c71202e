#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace isochron {

/// Arbitrary precision rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Binomial coefficient C(top, k) for a rational top (generalized binomial).
inline Rational binomial(const Rational& top, int k) {
  Rational result = 1;
  for (int i = 0; i < k; ++i) {
    result *= (top - i);
    result /= (i + 1);
  }
  return result;
}

inline Rational rational_pow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace isochron
