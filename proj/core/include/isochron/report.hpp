#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isochron/analyzer.hpp"
#include "isochron/spec_file.hpp"

namespace isochron {

struct CsvRow {
  double r0 = 0.0;
  double t_numeric = 0.0;
  double t_series = 0.0;
  double deviation = 0.0;
};

struct RunResult {
  AnalysisReport report;
  /// Period samples; empty for non-centers.
  std::vector<CsvRow> rows;
};

/// samples radii in (0, r_max): cell i holds r_max (i + u_i) / samples with
/// u_i in [1/4, 3/4] drawn from a 64-bit Mersenne twister seeded with `seed`.
std::vector<double> sample_grid(double r_max, int samples, std::uint64_t seed);

/// Full analysis plus the CSV sample table. Deterministic for a given spec.
RunResult run_report(const SystemSpec& spec);

/// Human-readable report; numbers carry 17 significant digits.
std::string format_report(const SystemSpec& spec, const RunResult& result);

/// "r0,T_numeric,T_series,deviation" rows; an optional "# generated ..." line first.
std::string format_csv(const std::vector<CsvRow>& rows, const std::optional<std::string>& timestamp = std::nullopt);

/// %.17g
std::string format_real(double v);

}  // namespace isochron
