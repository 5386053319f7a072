#include "ghpkerr/chart.hpp"

#include <cmath>
#include <sstream>

namespace ghpkerr {

namespace {

std::string point_str(const SpacetimePoint& p) {
  std::ostringstream os;
  os << chart_name(p.chart) << " (" << p.coords[0] << ", " << p.coords[1] << ", " << p.coords[2]
     << ", " << p.coords[3] << ")";
  return os.str();
}

double wrap_2pi(double phi) {
  phi = std::fmod(phi, 2.0 * M_PI);
  return phi < 0 ? phi + 2.0 * M_PI : phi;
}

}  // namespace

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::BLAngular: return "BL-angular";
    case Chart::BLStereoN: return "BL-stereoN";
    case Chart::BLStereoS: return "BL-stereoS";
    case Chart::KerrStarAngular: return "KerrStar-angular";
  }
  return "?";
}

void check_domain(const KerrParams& params, const SpacetimePoint& p) {
  const double r = p.coords[1];
  if (p.chart == Chart::KerrStarAngular) {
    if (!(r > params.r0() - params.kerr_star_margin()))
      throw DomainError("r below the Kerr-star extension floor at " + point_str(p));
  } else {
    if (!(r > params.r0())) throw DomainError("r inside the horizon at " + point_str(p));
  }
  if (p.chart == Chart::BLAngular || p.chart == Chart::KerrStarAngular) {
    const double th = p.coords[2];
    const double d = params.axis_delta();
    if (!(th >= d && th <= M_PI - d))
      throw DomainError("angular chart too close to the axis at " + point_str(p) +
                        "; use a stereographic chart");
  }
  // Stereographic charts exclude only their own pole, which sits at infinity
  // in their own coordinates; any finite (x, y) is admissible.
}

JVec4 lift(const SpacetimePoint& p) {
  JVec4 out;
  for (int i = 0; i < 4; ++i) out[i] = Jet::variable(i, p.coords[i]);
  return out;
}

double kerr_star_T(const KerrParams& params, double r) {
  const double rp = params.r0(), rm = params.r_inner(), r1 = params.r1();
  const double M = params.mass();
  if (!(r > rp)) throw DomainError("kerr_star_T defined for r > r0");
  return (r - r1) + 2.0 * M *
                        (rp * std::log((r - rp) / (r1 - rp)) - rm * std::log((r - rm) / (r1 - rm))) /
                        (rp - rm);
}

double kerr_star_A(const KerrParams& params, double r) {
  const double rp = params.r0(), rm = params.r_inner(), r1 = params.r1();
  if (!(r > rp)) throw DomainError("kerr_star_A defined for r > r0");
  return params.spin() * (std::log((r - rp) / (r1 - rp)) - std::log((r - rm) / (r1 - rm))) / (rp - rm);
}

namespace {

// (theta, phi) from a point in any chart; phi in [0, 2pi).
void sphere_angles(const SpacetimePoint& p, double& theta, double& phi) {
  switch (p.chart) {
    case Chart::BLAngular:
    case Chart::KerrStarAngular:
      theta = p.coords[2];
      phi = p.coords[3];
      break;
    case Chart::BLStereoN:
    case Chart::BLStereoS: {
      const double x = p.coords[2], y = p.coords[3];
      const double R = std::hypot(x, y);
      if (R == 0.0)
        theta = (p.chart == Chart::BLStereoN) ? M_PI : 0.0;
      else
        theta = 2.0 * std::atan((p.chart == Chart::BLStereoN) ? 1.0 / R : R);
      phi = std::atan2(y, x);
      break;
    }
  }
  phi = wrap_2pi(phi);
}

}  // namespace

SpacetimePoint convert(const KerrParams& params, const SpacetimePoint& p, Chart target) {
  if (p.chart == target) return p;
  double theta, phi;
  sphere_angles(p, theta, phi);

  // Reduce to BL time/longitude first.
  double t = p.coords[0];
  const double r = p.coords[1];
  if (p.chart == Chart::KerrStarAngular) {
    t -= kerr_star_T(params, r);
    phi -= kerr_star_A(params, r);
  }

  SpacetimePoint out;
  out.chart = target;
  switch (target) {
    case Chart::BLAngular:
      out.coords = RVec4(t, r, theta, wrap_2pi(phi));
      break;
    case Chart::KerrStarAngular:
      out.coords = RVec4(t + kerr_star_T(params, r), r, theta,
                         wrap_2pi(phi + kerr_star_A(params, r)));
      break;
    case Chart::BLStereoN: {
      if (theta <= 0.0) throw DomainError("north pole excluded from BL-stereoN");
      const double R = 1.0 / std::tan(theta / 2.0);
      out.coords = RVec4(t, r, R * std::cos(phi), R * std::sin(phi));
      break;
    }
    case Chart::BLStereoS: {
      if (theta >= M_PI) throw DomainError("south pole excluded from BL-stereoS");
      const double R = std::tan(theta / 2.0);
      out.coords = RVec4(t, r, R * std::cos(phi), R * std::sin(phi));
      break;
    }
  }
  return out;
}

CVec4 push_vector(const KerrParams& params, const SpacetimePoint& p, const CVec4& v, Chart target) {
  if (p.chart == target) return v;
  double theta, phi;
  sphere_angles(p, theta, phi);
  const double r = p.coords[1];
  // The stereographic rotation below needs the BL longitude, not phi*.
  if (p.chart == Chart::KerrStarAngular) phi = wrap_2pi(phi - kerr_star_A(params, r));

  // Reduce components to BL-angular first.
  CVec4 bl = v;
  switch (p.chart) {
    case Chart::BLAngular:
      break;
    case Chart::KerrStarAngular: {
      // t = t* - T(r), phi = phi* - A(r): v^t = v^{t*} - T' v^r, v^phi = v^{phi*} - A' v^r.
      const double D = params.delta_r(r);
      bl[0] = v[0] - (r * r + params.spin() * params.spin()) / D * v[1];
      bl[3] = v[3] - params.spin() / D * v[1];
      break;
    }
    case Chart::BLStereoN:
    case Chart::BLStereoS: {
      const bool north = p.chart == Chart::BLStereoN;
      // Invert the Jacobian of (x,y)(theta,phi): see the forward form below.
      const double x = p.coords[2], y = p.coords[3];
      const double s2 = x * x + y * y;
      const double dRdth = (north ? -1.0 : 1.0) * (1.0 + s2) / 2.0;
      const double c = std::cos(phi), s = std::sin(phi);
      // v_x = dRdth*c*v_th - y*v_ph ; v_y = dRdth*s*v_th + x*v_ph
      const Complex vth = (c * v[2] + s * v[3]) / dRdth;
      Complex vph;
      if (s2 > 0)
        vph = (x * v[3] - y * v[2]) / s2;
      else
        throw DomainError("vector push undefined at a stereographic origin pole");
      bl[2] = vth;
      bl[3] = vph;
      break;
    }
  }

  CVec4 out = bl;
  switch (target) {
    case Chart::BLAngular:
      break;
    case Chart::KerrStarAngular: {
      const double D = params.delta_r(r);
      if (D == 0.0) throw DomainError("push to Kerr-star from BL undefined at the horizon");
      out[0] = bl[0] + (r * r + params.spin() * params.spin()) / D * bl[1];
      out[3] = bl[3] + params.spin() / D * bl[1];
      break;
    }
    case Chart::BLStereoN:
    case Chart::BLStereoS: {
      const bool north = target == Chart::BLStereoN;
      const double R = north ? 1.0 / std::tan(theta / 2.0) : std::tan(theta / 2.0);
      const double s2 = R * R;
      const double dRdth = (north ? -1.0 : 1.0) * (1.0 + s2) / 2.0;
      const double c = std::cos(phi), s = std::sin(phi);
      const double x = R * c, y = R * s;
      out[2] = dRdth * c * bl[2] - y * bl[3];
      out[3] = dRdth * s * bl[2] + x * bl[3];
      break;
    }
  }
  return out;
}

Jet phi_mod_2pi(const Jet& phi) {
  Jet out = phi;
  double v = out.value().real();
  v = std::fmod(v, 2.0 * M_PI);
  if (v < 0) v += 2.0 * M_PI;
  out.value() = Complex(v, 0.0);
  return out;
}

AngularJets angular_from_stereo(const Jet& x, const Jet& y, bool north) {
  const Jet s2 = x * x + y * y;
  if (s2.value().real() == 0.0) throw DomainError("angular coordinates undefined at a stereographic origin");
  const Jet cth = north ? (s2 - 1.0) / (s2 + 1.0) : (1.0 - s2) / (1.0 + s2);
  AngularJets out;
  out.theta = acos(cth);
  out.phi = phi_mod_2pi(atan2(y, x));
  return out;
}

void stereo_from_angular(const Jet& theta, const Jet& phi, bool north, Jet& x, Jet& y) {
  const Jet half = theta * 0.5;
  const Jet R = north ? cos(half) / sin(half) : sin(half) / cos(half);
  x = R * cos(phi);
  y = R * sin(phi);
}

}  // namespace ghpkerr
