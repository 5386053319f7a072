#pragma once

#include <cmath>

#include "ghpkerr/errors.hpp"

namespace ghpkerr {

/// Subextremal Kerr parameters. 0 < spin < mass is enforced at construction;
/// the outer horizon radius r0 = M + sqrt(M^2 - a^2) is cached.
class KerrParams {
 public:
  KerrParams(double mass, double spin, double kerr_star_anchor = 0.0)
      : mass_(mass), spin_(spin) {
    if (!(mass > 0.0)) throw UsageError("mass must be positive");
    if (!(spin > 0.0 && spin < mass)) throw UsageError("subextremality requires 0 < spin < mass");
    r0_ = mass + std::sqrt(mass * mass - spin * spin);
    r_inner_ = mass - std::sqrt(mass * mass - spin * spin);
    r1_ = (kerr_star_anchor == 0.0) ? 3.0 * mass : kerr_star_anchor;
    if (!(r1_ > r0_)) throw UsageError("kerr_star_anchor r1 must exceed r0");
  }

  double mass() const { return mass_; }
  double spin() const { return spin_; }
  double r0() const { return r0_; }
  double r_inner() const { return r_inner_; }
  double r1() const { return r1_; }

  /// Angular charts require theta in [axis_delta, pi - axis_delta]; the
  /// polar caps are served by the stereographic charts only.
  double axis_delta() const { return axis_delta_; }
  void set_axis_delta(double d) { axis_delta_ = d; }

  /// Kerr-star chart admits r > r0 - kerr_star_margin.
  double kerr_star_margin() const { return kerr_star_margin_ > 0.0 ? kerr_star_margin_ : 0.25 * mass_; }
  void set_kerr_star_margin(double m) { kerr_star_margin_ = m; }

  double delta_r(double r) const { return r * r - 2.0 * mass_ * r + spin_ * spin_; }

 private:
  double mass_;
  double spin_;
  double r0_;
  double r_inner_;
  double r1_;
  double axis_delta_ = 1e-3;
  double kerr_star_margin_ = 0.0;
};

}  // namespace ghpkerr
