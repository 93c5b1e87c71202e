#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isochron/system.hpp"

namespace isochron {

struct RunOptions {
  int order = 8;
  /// 0 means "derive from the annulus estimate".
  double r_max = 0.0;
  int samples = 64;
  double tol = 1e-6;
  std::uint64_t seed = 0;

  friend bool operator==(const RunOptions&, const RunOptions&) = default;
};

/// A parsed system specification file.
///
///   [upper]
///   degree = 3
///   coeffs = 0, 1, 0, 0        # x^2 y
///   [lower]
///   degree = 3
///   coeffs = 0, 0, 0, 1        # y^3
///   [options]
///   order = 8
///
/// Coefficient i multiplies x^{d-i} y^i and is an integer or "p/q".
struct SystemSpec {
  PiecewiseSystem system;
  RunOptions options;
  std::vector<std::string> warnings;

  bool same_content(const SystemSpec& o) const { return system == o.system && options == o.options; }
};

/// Strict parse. Throws ParseError (with line/column) or DegreeMismatch.
/// Adds an "EmptySystem" warning when both nonlinearities are zero.
SystemSpec parse_spec(std::string_view text);

/// Canonical text form; parse_spec(format_spec(s)) reproduces s exactly.
std::string format_spec(const SystemSpec& spec);

/// Exact rational from "p", "-p", "p/q"; throws std::invalid_argument.
Rational parse_rational(std::string_view token);

}  // namespace isochron
