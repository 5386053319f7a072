#pragma once

#include <string>

#include "ghpkerr/kerr.hpp"
#include "ghpkerr/types.hpp"

namespace ghpkerr {

enum class Chart {
  BLAngular,        // (t, r, theta, phi)
  BLStereoN,        // (t, r, xN, yN), xN + i yN = cot(theta/2) e^{i phi}; excludes the north pole
  BLStereoS,        // (t, r, xS, yS), xS + i yS = tan(theta/2) e^{i phi}; excludes the south pole
  KerrStarAngular,  // (t*, r, theta, phi*)
};

std::string chart_name(Chart c);

struct SpacetimePoint {
  Chart chart = Chart::BLAngular;
  RVec4 coords = RVec4::Zero();

  static SpacetimePoint bl(double t, double r, double theta, double phi) {
    return {Chart::BLAngular, RVec4(t, r, theta, phi)};
  }
  static SpacetimePoint kerr_star(double ts, double r, double theta, double phis) {
    return {Chart::KerrStarAngular, RVec4(ts, r, theta, phis)};
  }
};

/// Throws DomainError when the point lies outside its chart's domain
/// (r floor, axis policy, pole exclusion).
void check_domain(const KerrParams& params, const SpacetimePoint& p);

/// Coordinate jets seeded at the point's coordinates.
JVec4 lift(const SpacetimePoint& p);

/// Radial shift functions of the Kerr-star chart, t* = t + T(r),
/// phi* = phi + A(r), anchored at r1 (closed forms, r > r0).
double kerr_star_T(const KerrParams& params, double r);
double kerr_star_A(const KerrParams& params, double r);

/// Point conversion between charts (same spacetime event).
SpacetimePoint convert(const KerrParams& params, const SpacetimePoint& p, Chart target);

/// Push a tangent vector (components in p.chart's basis) to the target
/// chart's basis at the same event.
CVec4 push_vector(const KerrParams& params, const SpacetimePoint& p, const CVec4& v, Chart target);

// Sphere-coordinate maps as jets, used when a field component defined in one
// trivialization's natural chart is evaluated from another's.
struct AngularJets {
  Jet theta, phi;  // phi in [0, 2pi)
};
AngularJets angular_from_stereo(const Jet& x, const Jet& y, bool north);
void stereo_from_angular(const Jet& theta, const Jet& phi, bool north, Jet& x, Jet& y);

/// phi reduced to [0, 2pi) (jet-smooth away from phi = 0).
Jet phi_mod_2pi(const Jet& phi);

}  // namespace ghpkerr
