#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "isochron/trigmoments.hpp"

namespace isochron {

inline void PrintTo(const TrigValue& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const HomogeneousPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace isochron

namespace isochron::testing {

/// Small random rationals p/q with |p| <= span, 1 <= q <= 4.
inline Rational random_rational(std::mt19937_64& rng, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return make_rational(num(rng), den(rng));
}

inline HomogeneousPoly random_poly(std::mt19937_64& rng, int degree, int span = 3) {
  std::vector<Rational> coeffs;
  for (int i = 0; i <= degree; ++i) coeffs.push_back(random_rational(rng, span));
  return HomogeneousPoly(degree, std::move(coeffs));
}

/// Monomial x^{d-i} y^i with coefficient c.
inline HomogeneousPoly monomial(int degree, int i, const Rational& c = 1) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(i)] = c;
  return HomogeneousPoly(degree, std::move(coeffs));
}

inline HomogeneousPoly poly(int degree, std::vector<Rational> coeffs) { return HomogeneousPoly(degree, std::move(coeffs)); }

}  // namespace isochron::testing
