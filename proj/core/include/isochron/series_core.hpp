#pragma once

#include <vector>

#include "isochron/param_poly.hpp"
#include "isochron/rational.hpp"

namespace isochron {

/// Parametric coefficients of the reversion r(h,θ) of h² = r² + 2 g r^{n+1}.
///
/// Every family is indexed by the reduced index j, i.e. the coefficient of
/// h^{j(n-1)} (or r₀^{j(n-1)}), never by the raw exponent. Entry 0 of each
/// vector is a placeholder so that index j means j.
struct CoefficientTable {
  int jmax = 0;
  /// b_{j(n-1)} = λ_j(n) g^j.
  std::vector<ParamPoly> lambda;
  /// T_π(h) = π + Σ λ̃_j(n) c_j h^{j(n-1)}.
  std::vector<ParamPoly> lambda_tilde;
  /// μ_{j(n-1)} = Σ_i q_{j,i}(n) a₀^{j-i} c_i; q_table[j][i] for 1 <= i <= j.
  std::vector<std::vector<ParamPoly>> q_table;
};

/// Builds λ, λ̃ and q up to jmax by exact recursion in n.
CoefficientTable build_lambda_table(int jmax = 8);

/// Independent route: undetermined coefficients for concrete n with a unit
/// nonlinearity. Entry j is β_{j(n-1)} (entry 0 is the leading 1).
/// Throws SparsityViolation when any coefficient off the (n-1)-grid is nonzero.
std::vector<Rational> reversion_oracle(int jmax, int n);

/// True iff every reversion coefficient through h^{jmax(n-1)} whose exponent
/// is not a multiple of n-1 vanishes exactly.
bool check_sparsity(int jmax, int n);

/// Truncated power series with rational coefficients (entry k = coefficient of x^k).
using RationalSeries = std::vector<Rational>;

RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b, int order);
RationalSeries series_power(const RationalSeries& base, int exponent, int order);

}  // namespace isochron
