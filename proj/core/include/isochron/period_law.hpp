#pragma once

#include <map>
#include <optional>

#include "isochron/series_core.hpp"
#include "isochron/system.hpp"
#include "isochron/trigmoments.hpp"

namespace isochron {

enum class SeriesVariable { energy_h, radius_r0 };

/// Truncated period expansion constant + Σ coeff_e ρ^e, ρ = h or r₀.
/// Zero coefficients are never stored; exponents lie in [1, truncation_order].
class PeriodSeries {
 public:
  PeriodSeries(TrigValue constant, SeriesVariable variable, int truncation_order);

  const TrigValue& constant() const noexcept { return constant_; }
  const std::map<int, TrigValue>& terms() const noexcept { return terms_; }
  SeriesVariable variable() const noexcept { return variable_; }
  int truncation_order() const noexcept { return truncation_order_; }

  /// Accumulates into the coefficient at `exponent`, dropping it if it cancels to zero.
  void add_term(int exponent, const TrigValue& value);
  TrigValue coefficient(int exponent) const;
  double evaluate(double rho) const;

  friend bool operator==(const PeriodSeries&, const PeriodSeries&) = default;

 private:
  TrigValue constant_;
  std::map<int, TrigValue> terms_;
  SeriesVariable variable_;
  int truncation_order_;
};

/// Shared, lazily grown coefficient table holding at least jmax entries.
const CoefficientTable& lambda_table(int jmax);

/// T_π(h) = π + Σ_j λ̃_j(n) c_j h^{j(n-1)} with c_j over the side's half circle.
PeriodSeries half_period_series_h(const HomogeneousPoly& p, Side side, int jmax);

/// Whole-plane period T(h) (or T(r₀)) of the smooth system of p; constant 2π.
PeriodSeries full_period_series(const HomogeneousPoly& p, int jmax,
                                SeriesVariable variable = SeriesVariable::energy_h);

/// h = r₀ Σ_k bracket[k] r₀^{k·stride}, from h² = r₀² + 2a₀ r₀^{n+1}.
struct AxisReparam {
  int stride = 1;
  RationalSeries bracket;
};
AxisReparam h_of_r0_series(const Rational& a0, int n, int order);

/// T_π(h(r₀)) composed exactly; coefficient at r₀^{j(n-1)} is μ_{j(n-1)}.
PeriodSeries half_period_series_r0(const HomogeneousPoly& p, Side side, int jmax);

/// T(r₀) = T_π+(r₀) + T_π-(r₀), truncated at r₀-exponent `order`.
/// Throws NotACenter, or DegreeTooLow for a nonzero degree-2 side.
PeriodSeries combined_period_series(const PiecewiseSystem& sys, int order);

struct Obstruction {
  int exponent = 0;
  TrigValue coefficient;
};

/// Lowest nonzero term of T(r₀) - T(0) through r₀^order, or nullopt if every
/// coefficient vanishes. Degree-2 sides have an r₀-independent half period and
/// contribute no terms.
std::optional<Obstruction> first_obstruction(const PiecewiseSystem& sys, int order);

}  // namespace isochron
