#include "isochron/period_law.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "isochron/errors.hpp"

namespace isochron {

PeriodSeries::PeriodSeries(TrigValue constant, SeriesVariable variable, int truncation_order)
    : constant_(std::move(constant)), variable_(variable), truncation_order_(truncation_order) {}

void PeriodSeries::add_term(int exponent, const TrigValue& value) {
  if (exponent < 1 || exponent > truncation_order_) {
    throw std::out_of_range("PeriodSeries: exponent " + std::to_string(exponent) + " outside [1, " +
                            std::to_string(truncation_order_) + "]");
  }
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TrigValue PeriodSeries::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? TrigValue() : it->second;
}

double PeriodSeries::evaluate(double rho) const {
  // Highest powers first keeps the small terms from being swamped early.
  double sum = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) sum += it->second.to_double() * std::pow(rho, it->first);
  return constant_.to_double() + sum;
}

const CoefficientTable& lambda_table(int jmax) {
  // Superseded tables stay alive so references handed out earlier remain valid.
  static std::mutex mutex;
  static std::vector<std::unique_ptr<const CoefficientTable>> tables;
  std::lock_guard lock(mutex);
  if (tables.empty() || tables.back()->jmax < jmax) {
    const int size = tables.empty() ? std::max(jmax, 8) : std::max(jmax, 2 * tables.back()->jmax);
    tables.push_back(std::make_unique<const CoefficientTable>(build_lambda_table(size)));
  }
  return *tables.back();
}

namespace {

// Reduced-index coefficients A_j = λ̃_j(n) c_j, entry 0 unused.
std::vector<TrigValue> energy_coefficients(const HomogeneousPoly& p, ArcRange range, int jmax) {
  const int n = p.degree() - 1;
  std::vector<TrigValue> out(static_cast<std::size_t>(jmax) + 1);
  if (p.is_zero() || jmax < 1) return out;
  const auto& table = lambda_table(jmax);
  const Rational nq = n;
  for (int j = 1; j <= jmax; ++j) {
    const TrigValue c = g_power_integral(p, j, range);
    if (c.is_zero()) continue;
    out[static_cast<std::size_t>(j)] = c * table.lambda_tilde[static_cast<std::size_t>(j)].evaluate(nq);
  }
  return out;
}

TrigValue constant_for(ArcRange range) { return TrigValue::pi(range == ArcRange::full ? 2 : 1); }

void require_series_degree(const HomogeneousPoly& p) {
  if (p.degree() < 3 && !p.is_zero()) {
    throw DegreeTooLow("period series need side degree >= 3 (n >= 2); degree-2 sides are linear");
  }
}

PeriodSeries energy_series(const HomogeneousPoly& p, ArcRange range, int jmax) {
  require_series_degree(p);
  const int stride = p.degree() - 2;  // n - 1
  if (stride == 0) return PeriodSeries(constant_for(range), SeriesVariable::energy_h, 0);
  PeriodSeries series(constant_for(range), SeriesVariable::energy_h, jmax * stride);
  const auto coeffs = energy_coefficients(p, range, jmax);
  for (int j = 1; j <= jmax; ++j) series.add_term(j * stride, coeffs[static_cast<std::size_t>(j)]);
  return series;
}

PeriodSeries radius_series(const HomogeneousPoly& p, ArcRange range, int jmax) {
  require_series_degree(p);
  const int n = p.degree() - 1;
  const int stride = n - 1;
  if (stride == 0) return PeriodSeries(constant_for(range), SeriesVariable::radius_r0, 0);
  PeriodSeries series(constant_for(range), SeriesVariable::radius_r0, jmax * stride);
  if (p.is_zero() || jmax < 1) return series;
  const auto energy = energy_coefficients(p, range, jmax);
  const auto reparam = h_of_r0_series(p.axis_value(), n, jmax);
  // h^{j(n-1)} = r₀^{j(n-1)} B(x)^{j(n-1)}, x = r₀^{n-1}.
  for (int j = 1; j <= jmax; ++j) {
    const auto& a = energy[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    const int room = jmax - j;
    const auto bpow = series_power(reparam.bracket, j * stride, room);
    for (int k = 0; k <= room; ++k) {
      const auto& b = bpow[static_cast<std::size_t>(k)];
      if (sgn(b) == 0) continue;
      series.add_term((j + k) * stride, a * b);
    }
  }
  return series;
}

}  // namespace

PeriodSeries half_period_series_h(const HomogeneousPoly& p, Side side, int jmax) {
  return energy_series(p, arc_of(side), jmax);
}

PeriodSeries full_period_series(const HomogeneousPoly& p, int jmax, SeriesVariable variable) {
  return variable == SeriesVariable::energy_h ? energy_series(p, ArcRange::full, jmax)
                                              : radius_series(p, ArcRange::full, jmax);
}

AxisReparam h_of_r0_series(const Rational& a0, int n, int order) {
  if (order < 0) throw std::invalid_argument("h_of_r0_series: negative order");
  AxisReparam out;
  out.stride = n - 1;
  out.bracket.resize(static_cast<std::size_t>(order) + 1);
  const Rational half(1, 2);
  const Rational two_a0 = 2 * a0;
  Rational power = 1;
  for (int k = 0; k <= order; ++k) {
    out.bracket[static_cast<std::size_t>(k)] = binomial(half, k) * power;
    power *= two_a0;
  }
  return out;
}

PeriodSeries half_period_series_r0(const HomogeneousPoly& p, Side side, int jmax) {
  return radius_series(p, arc_of(side), jmax);
}

PeriodSeries combined_period_series(const PiecewiseSystem& sys, int order) {
  const auto cls = classify(sys);
  if (!cls.is_center()) throw NotACenter("combined_period_series: " + cls.reason);
  PeriodSeries combined(TrigValue::pi(2), SeriesVariable::radius_r0, order);
  for (Side side : {Side::upper, Side::lower}) {
    const auto& p = sys.poly(side);
    require_series_degree(p);
    if (p.is_zero()) continue;
    const int stride = p.degree() - 2;
    const int jmax = order / stride;
    if (jmax < 1) continue;
    const auto half = half_period_series_r0(p, side, jmax);
    for (const auto& [e, c] : half.terms()) combined.add_term(e, c);
  }
  return combined;
}

std::optional<Obstruction> first_obstruction(const PiecewiseSystem& sys, int order) {
  const auto cls = classify(sys);
  if (!cls.is_center()) throw NotACenter("first_obstruction: " + cls.reason);
  PeriodSeries combined(TrigValue(), SeriesVariable::radius_r0, order);
  for (Side side : {Side::upper, Side::lower}) {
    const auto& p = sys.poly(side);
    if (p.is_zero() || p.degree() < 3) continue;
    const int stride = p.degree() - 2;
    const int jmax = order / stride;
    if (jmax < 1) continue;
    const auto half = half_period_series_r0(p, side, jmax);
    for (const auto& [e, c] : half.terms()) combined.add_term(e, c);
  }
  if (combined.terms().empty()) return std::nullopt;
  const auto& [e, c] = *combined.terms().begin();
  return Obstruction{e, c};
}

}  // namespace isochron
