#include "ghpkerr/tetrad.hpp"

#include <cmath>

#include <Eigen/LU>

namespace ghpkerr {

namespace {

const Complex kI(0.0, 1.0);

// Rotation exponent of m relative to the m-section: m_T = e^{i delta_T phi} m_N
// with delta in {N: 0, M: +1, S: +2}; relative factors follow by differences.
int delta_rel_n(Trivialization t) {
  switch (t) {
    case Trivialization::N: return 0;
    case Trivialization::M: return 1;
    case Trivialization::S: return 2;
  }
  return 0;
}

Jet phase(const Jet& phi, int k) {
  if (k == 0) return Jet(Complex(1.0));
  return exp(Jet(kI * static_cast<double>(k)) * phi);
}

Tetrad tetrad_bl_angular(const KerrParams& P, const JVec4& c, Trivialization triv) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], th = c[2], phi = c[3];
  const Jet Delta = r * r - (2.0 * M) * r + a * a;
  const Jet cth = cos(th), sth = sin(th);
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet p = r + Jet(kI) * (a * cth);
  const Jet sq2p = Jet(Complex(M_SQRT2)) * p;

  Tetrad out;
  out.l << (r * r + a * a) / Delta, Jet(Complex(1.0)), Jet(Complex(0.0)), Jet(a) / Delta;
  out.n << (r * r + a * a) / (2.0 * rho2), -Delta / (2.0 * rho2), Jet(Complex(0.0)),
      Jet(a) / (2.0 * rho2);
  out.m << Jet(kI * a) * sth / sq2p, Jet(Complex(0.0)), recip(sq2p), Jet(kI) / (sq2p * sth);
  const int k = delta_rel_n(triv) - delta_rel_n(Trivialization::M);
  if (k != 0) {
    const Jet f = phase(phi, k);
    for (int i = 0; i < 4; ++i) out.m[i] = f * out.m[i];
  }
  return out;
}

Tetrad tetrad_bl_stereo(const KerrParams& P, const JVec4& c, bool north, Trivialization triv) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], x = c[2], y = c[3];
  const Jet s2 = x * x + y * y;
  const Jet cth = north ? (s2 - 1.0) / (s2 + 1.0) : (1.0 - s2) / (1.0 + s2);
  const Jet Delta = r * r - (2.0 * M) * r + a * a;
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet p = r + Jet(kI) * (a * cth);
  const Jet sq2p = Jet(Complex(M_SQRT2)) * p;

  Tetrad out;
  // d_phi = x d_y - y d_x in either stereographic chart.
  out.l << (r * r + a * a) / Delta, Jet(Complex(1.0)), -y * a / Delta, x * a / Delta;
  out.n << (r * r + a * a) / (2.0 * rho2), -Delta / (2.0 * rho2), -y * a / (2.0 * rho2),
      x * a / (2.0 * rho2);
  if (north) {
    out.m << Jet(2.0 * kI * a) * (x - Jet(kI) * y) / ((1.0 + s2) * sq2p), Jet(Complex(0.0)),
        -(1.0 + s2) / (2.0 * sq2p), Jet(kI) * (1.0 + s2) / (2.0 * sq2p);
  } else {
    out.m << Jet(2.0 * kI * a) * (x + Jet(kI) * y) / ((1.0 + s2) * sq2p), Jet(Complex(0.0)),
        (1.0 + s2) / (2.0 * sq2p), Jet(kI) * (1.0 + s2) / (2.0 * sq2p);
  }
  const int k = delta_rel_n(triv) - delta_rel_n(north ? Trivialization::N : Trivialization::S);
  if (k != 0) {
    const Jet f = phase(phi_mod_2pi(atan2(y, x)), k);
    for (int i = 0; i < 4; ++i) out.m[i] = f * out.m[i];
  }
  return out;
}

Tetrad tetrad_kerr_star(const KerrParams& P, const JVec4& c, Trivialization triv) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], th = c[2], phi = c[3];
  const Jet Delta = r * r - (2.0 * M) * r + a * a;
  const Jet cth = cos(th), sth = sin(th);
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet p = r + Jet(kI) * (a * cth);
  const Jet sq2p = Jet(Complex(M_SQRT2)) * p;

  Tetrad out;
  out.l << 2.0 * (r * r + a * a), Delta, Jet(Complex(0.0)), Jet(Complex(2.0 * a));
  out.n << Jet(Complex(0.0)), -recip(2.0 * rho2), Jet(Complex(0.0)), Jet(Complex(0.0));
  out.m << Jet(kI * a) * sth / sq2p, Jet(Complex(0.0)), recip(sq2p), Jet(kI) / (sq2p * sth);
  const int k = delta_rel_n(triv) - delta_rel_n(Trivialization::M);
  if (k != 0) {
    const Jet f = phase(phi, k);
    for (int i = 0; i < 4; ++i) out.m[i] = f * out.m[i];
  }
  return out;
}

}  // namespace

Chart natural_chart(Trivialization t) {
  switch (t) {
    case Trivialization::M: return Chart::BLAngular;
    case Trivialization::N: return Chart::BLStereoN;
    case Trivialization::S: return Chart::BLStereoS;
  }
  return Chart::BLAngular;
}

std::string trivialization_name(Trivialization t) {
  switch (t) {
    case Trivialization::M: return "m";
    case Trivialization::N: return "N";
    case Trivialization::S: return "S";
  }
  return "?";
}

Tetrad tetrad_jets(const KerrParams& params, Chart chart, const JVec4& coords, Trivialization triv) {
  switch (chart) {
    case Chart::BLAngular: return tetrad_bl_angular(params, coords, triv);
    case Chart::BLStereoN: return tetrad_bl_stereo(params, coords, true, triv);
    case Chart::BLStereoS: return tetrad_bl_stereo(params, coords, false, triv);
    case Chart::KerrStarAngular: return tetrad_kerr_star(params, coords, triv);
  }
  throw UsageError("unknown chart");
}

Tetrad kinnersley_at(const KerrParams& params, const SpacetimePoint& point) {
  if (point.chart == Chart::KerrStarAngular)
    throw UsageError("kinnersley_at expects a Boyer-Lindquist chart; use extended_tetrad_at");
  check_domain(params, point);
  return tetrad_jets(params, point.chart, lift(point), Trivialization::M);
}

Tetrad extended_tetrad_at(const KerrParams& params, const SpacetimePoint& point) {
  if (point.chart != Chart::KerrStarAngular)
    throw UsageError("extended_tetrad_at expects the Kerr-star chart");
  check_domain(params, point);
  return tetrad_jets(params, point.chart, lift(point), Trivialization::M);
}

Tetrad act_tetrad(const Tetrad& tet, Complex z, bool swap) {
  if (z == Complex(0)) throw UsageError("tetrad action requires z != 0");
  const double az = std::abs(z);
  const Complex ph = z / az;
  Tetrad out;
  for (int i = 0; i < 4; ++i) {
    out.l[i] = Jet(Complex(az)) * tet.l[i];
    out.n[i] = Jet(Complex(1.0 / az)) * tet.n[i];
    out.m[i] = Jet(ph) * tet.m[i];
  }
  if (swap) {
    std::swap(out.l, out.n);
    out.m = conj(out.m);
  }
  return out;
}

TetradResiduals tetrad_residuals(const MetricValue& metric, const Tetrad& tet) {
  const JVec4& l = tet.l;
  const JVec4& n = tet.n;
  const JVec4& m = tet.m;
  const JVec4 mb = tet.mbar();
  auto P = [&](const JVec4& X, const JVec4& Y) { return metric_pair(metric.g, X, Y).value(); };
  TetradResiduals out;
  out.entries = {{{"g(l,l)", P(l, l)},
                  {"g(n,n)", P(n, n)},
                  {"g(m,m)", P(m, m)},
                  {"g(mbar,mbar)", P(mb, mb)},
                  {"g(l,n)-1", P(l, n) - Complex(1.0)},
                  {"g(l,m)", P(l, m)},
                  {"g(l,mbar)", P(l, mb)},
                  {"g(n,m)", P(n, m)},
                  {"g(n,mbar)", P(n, mb)},
                  {"g(m,mbar)+1", P(m, mb) + Complex(1.0)}}};
  return out;
}

TetradResiduals tetrad_residuals(const KerrParams& params, const SpacetimePoint& point,
                                 const Tetrad& tet) {
  return tetrad_residuals(metric_at(params, point), tet);
}

double TetradResiduals::max_abs() const {
  double m = 0;
  for (const auto& e : entries) m = std::max(m, std::abs(e.second));
  return m;
}

Tetrad tetrad_field_at(const KerrParams& params, const TetradField& field, Chart chart,
                       const JVec4& coords) {
  return act_tetrad(tetrad_jets(params, chart, coords, field.triv), field.z, field.swap);
}

int orientation_sign(const MetricValue& metric, const Tetrad& tet) {
  (void)metric;
  Eigen::Matrix4d B;
  for (int i = 0; i < 4; ++i) {
    B(i, 0) = ((tet.n[i].value() + tet.l[i].value()) / M_SQRT2).real();
    B(i, 1) = tet.m[i].value().real();
    B(i, 2) = -tet.m[i].value().imag();
    B(i, 3) = ((tet.l[i].value() - tet.n[i].value()) / M_SQRT2).real();
  }
  return B.determinant() > 0 ? 1 : -1;
}

}  // namespace ghpkerr
