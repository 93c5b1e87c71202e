#include "isochron/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "isochron/parallel.hpp"

namespace isochron {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> sample_grid(double r_max, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // Top 53 bits -> [0,1) without relying on a library distribution.
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    grid.push_back(r_max * (i + 0.25 + 0.5 * unit) / samples);
  }
  return grid;
}

RunResult run_report(const SystemSpec& spec) {
  AnalysisOptions options;
  options.order = spec.options.order;
  options.r_max = spec.options.r_max;
  options.samples = spec.options.samples;
  options.tol = spec.options.tol;

  RunResult result;
  result.report = analyze(spec.system, options);
  const auto& report = result.report;
  if (!report.classification.is_center() || !(report.r_max > 0.0)) return result;

  const auto grid = sample_grid(report.r_max, spec.options.samples, spec.options.seed);
  result.rows = parallel_map(grid.size(), [&](std::size_t i) {
    CsvRow row;
    row.r0 = grid[i];
    row.t_numeric = numeric_period(spec.system, row.r0, options.flow);
    row.t_series = report.series ? report.series->evaluate(row.r0) : std::numeric_limits<double>::quiet_NaN();
    row.deviation = std::abs(row.t_numeric - row.t_series);
    return row;
  });
  return result;
}

namespace {

std::string series_to_string(const PeriodSeries& s) {
  std::string out = "(" + s.constant().to_string() + ")";
  for (const auto& [e, c] : s.terms()) out += " + (" + c.to_string() + ")*r0^" + std::to_string(e);
  return out;
}

}  // namespace

std::string format_report(const SystemSpec& spec, const RunResult& result) {
  const auto& sys = spec.system;
  const auto& r = result.report;
  std::string out;
  out += "upper: H+ = (x^2+y^2)/2 + " + sys.upper().to_string() + "   (n = " + std::to_string(sys.n()) +
         ", a0+ = " + sys.a0_plus().get_str() + ")\n";
  out += "lower: H- = (x^2+y^2)/2 + " + sys.lower().to_string() + "   (m = " + std::to_string(sys.m()) +
         ", a0- = " + sys.a0_minus().get_str() + ")\n";
  for (const auto& w : spec.warnings) out += "warning: " + w + "\n";
  out += std::string("classification: ") + to_string(r.classification.verdict);
  if (r.classification.is_center()) out += std::string(" (case ") + to_string(r.classification.case_tag) + ")";
  out += " -- " + r.classification.reason + "\n";
  out += "sampling radius r_max: " + format_real(r.r_max) + "\n";

  if (!r.classification.is_center()) {
    out += "correspondence gap r1+ - r1-:\n";
    for (const auto& g : r.gaps) out += "  r0 = " + format_real(g.r0) + "  gap = " + format_real(g.gap) + "\n";
    out += "verdict: NotCenter (half maps disagree; no period function)\n";
    for (const auto& a : r.anomalies) out += "anomaly: " + a + "\n";
    return out;
  }

  out += "limit period T(0): " + format_real(r.limit_period) + "\n";
  if (r.series) {
    out += "series T(r0) through r0^" + std::to_string(r.series->truncation_order()) + ": " +
           series_to_string(*r.series) + "\n";
  } else {
    out += "series: not available (nonzero linear side)\n";
  }
  if (r.first_obstruction) {
    out += "first obstruction: r0^" + std::to_string(r.first_obstruction->exponent) + " coefficient " +
           r.first_obstruction->coefficient.to_string() + " = " +
           format_real(r.first_obstruction->coefficient.to_double()) + "\n";
  } else {
    out += "first obstruction: none through the truncation order\n";
  }
  for (const auto& m : r.monotonicity) {
    out += std::string("monotonicity (") + to_string(m.side) + " smooth system): measured " + to_string(m.measured) +
           ", predicted " + to_string(m.predicted) + "\n";
  }
  if (r.crosscheck) out += "cross-check max |T_numeric - T_series|: " + format_real(*r.crosscheck) + "\n";
  if (r.witness) {
    out += "witness: r0 = " + format_real(r.witness->r0) + "  T = " + format_real(r.witness->period) +
           "  |T - T(0)| = " + format_real(r.witness->deviation) + "\n";
  } else {
    out += "witness: none\n";
  }
  for (const auto& a : r.anomalies) out += "anomaly: " + a + "\n";

  const bool trivial = sys.upper().is_zero() && sys.lower().is_zero();
  if (trivial) {
    out += "verdict: isochronous (trivial linear)\n";
  } else if (r.witness) {
    out += "verdict: not isochronous (witness found)\n";
  } else {
    out += "verdict: no witness found; see anomalies\n";
  }
  return out;
}

std::string format_csv(const std::vector<CsvRow>& rows, const std::optional<std::string>& timestamp) {
  std::string out;
  if (timestamp) out += "# generated " + *timestamp + "\n";
  out += "r0,T_numeric,T_series,deviation\n";
  for (const auto& row : rows) {
    out += format_real(row.r0) + "," + format_real(row.t_numeric) + "," + format_real(row.t_series) + "," +
           format_real(row.deviation) + "\n";
  }
  return out;
}

}  // namespace isochron
