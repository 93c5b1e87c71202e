#pragma once

#include <array>
#include <optional>
#include <string>

#include "isochron/trigmoments.hpp"

namespace isochron {

/// X₊ on y >= 0 with H₊ = (x²+y²)/2 + upper, X₋ on y < 0 with H₋ = (x²+y²)/2 + lower.
class PiecewiseSystem {
 public:
  PiecewiseSystem(HomogeneousPoly upper, HomogeneousPoly lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {}

  const HomogeneousPoly& upper() const noexcept { return upper_; }
  const HomogeneousPoly& lower() const noexcept { return lower_; }
  const HomogeneousPoly& poly(Side side) const noexcept { return side == Side::upper ? upper_ : lower_; }

  int n() const noexcept { return upper_.degree() - 1; }
  int m() const noexcept { return lower_.degree() - 1; }
  /// Side exponent: n for upper, m for lower.
  int exponent(Side side) const noexcept { return poly(side).degree() - 1; }

  const Rational& a0_plus() const { return upper_.axis_value(); }
  const Rational& a0_minus() const { return lower_.axis_value(); }
  const Rational& a0(Side side) const { return poly(side).axis_value(); }

  friend bool operator==(const PiecewiseSystem&, const PiecewiseSystem&) = default;

 private:
  HomogeneousPoly upper_;
  HomogeneousPoly lower_;
};

enum class Verdict { sigma_center, not_center };
enum class CenterCase { I, II, III, IV, V, none };

const char* to_string(Verdict verdict);
const char* to_string(CenterCase c);

struct CenterClass {
  Verdict verdict = Verdict::not_center;
  CenterCase case_tag = CenterCase::none;
  std::string reason;

  bool is_center() const noexcept { return verdict == Verdict::sigma_center; }
};

/// Exact Σ-center test on the parities of n, m and the axis values a₀±.
CenterClass classify(const PiecewiseSystem& sys);

/// (x,y) ↦ (-x,-y): swaps the half-planes, each polynomial picking up (-1)^d.
PiecewiseSystem rotate_half_turn(const PiecewiseSystem& sys);

/// Returns an equivalent system with m <= n.
PiecewiseSystem normalize(const PiecewiseSystem& sys);

/// H± at (x,y) for the given side, regardless of the sign of y.
double hamiltonian(const HomogeneousPoly& p, double x, double y);
double hamiltonian(const PiecewiseSystem& sys, Side side, double x, double y);

/// Smooth Hamiltonian field (-∂H/∂y, ∂H/∂x) of one side.
std::array<double, 2> side_field(const HomogeneousPoly& p, double x, double y);

/// Piecewise field; y >= 0 uses the upper Hamiltonian.
std::array<double, 2> vector_field(const PiecewiseSystem& sys, double x, double y);

/// Numerical estimate of the period annulus of the smooth system of one side.
///
/// r_star is the smallest radius where 1 + d g(θ) r^{d-2} = 0 (d the side
/// degree); r0_limit is the largest axis radius whose level curve stays
/// strictly inside that disk. Both are +inf when g never goes negative.
struct AnnulusEstimate {
  Side side = Side::upper;
  double r_star = 0.0;
  std::optional<double> theta_star;
  double r0_limit = 0.0;

  bool bounded() const noexcept;
};

AnnulusEstimate annulus_bound(const HomogeneousPoly& p, Side side = Side::upper);
AnnulusEstimate annulus_bound(const PiecewiseSystem& sys, Side side);

/// max over θ of -g(θ) with its location (dense sampling plus Brent refinement).
std::pair<double, double> max_negative_g(const HomogeneousPoly& p);

/// Smallest r0_limit over both sides; +inf if both annuli are unbounded.
double common_r0_limit(const PiecewiseSystem& sys);

}  // namespace isochron
