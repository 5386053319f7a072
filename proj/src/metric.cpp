#include "ghpkerr/metric.hpp"

#include <cmath>

namespace ghpkerr {

namespace {

JMat4 zero_mat() {
  JMat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Jet(Complex(0));
  return m;
}

JMat4 metric_bl_angular(const KerrParams& P, const JVec4& c) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], th = c[2];
  const Jet cth = cos(th), sth = sin(th);
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet Delta = r * r - (2.0 * M) * r + a * a;
  const Jet s2 = sth * sth;

  JMat4 g = zero_mat();
  g(0, 0) = 1.0 - (2.0 * M) * r / rho2;
  g(0, 3) = g(3, 0) = (2.0 * M * a) * r * s2 / rho2;
  g(1, 1) = -rho2 / Delta;
  g(2, 2) = -rho2;
  g(3, 3) = -s2 * (r * r + a * a + (2.0 * M * a * a) * r * s2 / rho2);
  return g;
}

// Split form g = alpha dt^2 + 2 beta dt sigma - rho^2/Delta dr^2
//              - rho^2 g_{S^2} - a^2 (1 + 2Mr/rho^2) sigma^2
// with sigma = sin^2(theta) dphi = F (x dy - y dx), F = 4/(1+x^2+y^2)^2,
// pushed through the stereographic change of variables.
JMat4 metric_bl_stereo(const KerrParams& P, const JVec4& c, bool north) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], x = c[2], y = c[3];
  const Jet s2 = x * x + y * y;
  const Jet cth = north ? (s2 - 1.0) / (s2 + 1.0) : (1.0 - s2) / (1.0 + s2);
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet Delta = r * r - (2.0 * M) * r + a * a;
  const Jet F = 4.0 * recip((1.0 + s2) * (1.0 + s2));
  const Jet sig_x = -F * y, sig_y = F * x;
  const Jet beta = (2.0 * M * a) * r / rho2;
  const Jet csig = (a * a) * (1.0 + (2.0 * M) * r / rho2);

  JMat4 g = zero_mat();
  g(0, 0) = 1.0 - (2.0 * M) * r / rho2;
  g(0, 2) = g(2, 0) = beta * sig_x;
  g(0, 3) = g(3, 0) = beta * sig_y;
  g(1, 1) = -rho2 / Delta;
  g(2, 2) = -rho2 * F - csig * sig_x * sig_x;
  g(3, 3) = -rho2 * F - csig * sig_y * sig_y;
  g(2, 3) = g(3, 2) = -csig * sig_x * sig_y;
  return g;
}

// Substituting dt = dt* - T' dr, dphi = dphi* - A' dr collapses every
// 1/Delta_r: g_{t*r} = -1, g_{r phi*} = a sin^2(theta), g_{rr} = 0.
JMat4 metric_kerr_star(const KerrParams& P, const JVec4& c) {
  const double M = P.mass(), a = P.spin();
  const Jet r = c[1], th = c[2];
  const Jet cth = cos(th), sth = sin(th);
  const Jet rho2 = r * r + (a * a) * cth * cth;
  const Jet s2 = sth * sth;

  JMat4 g = zero_mat();
  g(0, 0) = 1.0 - (2.0 * M) * r / rho2;
  g(0, 3) = g(3, 0) = (2.0 * M * a) * r * s2 / rho2;
  g(0, 1) = g(1, 0) = Jet(Complex(-1.0));
  g(1, 3) = g(3, 1) = a * s2;
  g(2, 2) = -rho2;
  g(3, 3) = -s2 * (r * r + a * a + (2.0 * M * a * a) * r * s2 / rho2);
  return g;
}

}  // namespace

MetricValue metric_jets(const KerrParams& params, Chart chart, const JVec4& coords) {
  MetricValue out;
  switch (chart) {
    case Chart::BLAngular: out.g = metric_bl_angular(params, coords); break;
    case Chart::BLStereoN: out.g = metric_bl_stereo(params, coords, true); break;
    case Chart::BLStereoS: out.g = metric_bl_stereo(params, coords, false); break;
    case Chart::KerrStarAngular: out.g = metric_kerr_star(params, coords); break;
  }
  out.ginv = inverse4(out.g);
  return out;
}

MetricValue metric_at(const KerrParams& params, const SpacetimePoint& point) {
  check_domain(params, point);
  return metric_jets(params, point.chart, lift(point));
}

Jet metric_pair(const JMat4& g, const JVec4& X, const JVec4& Y) {
  Jet out(Complex(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out += g(i, j) * X[i] * Y[j];
  return out;
}

Complex metric_pair_values(const JMat4& g, const CVec4& X, const CVec4& Y) {
  Complex out(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out += g(i, j).value() * X[i] * Y[j];
  return out;
}

JMat4 inverse4(const JMat4& m) {
  Jet a[4][8];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m(i, j);
      a[i][4 + j] = Jet(Complex(i == j ? 1.0 : 0.0));
    }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int rr = col + 1; rr < 4; ++rr)
      if (std::abs(a[rr][col].value()) > std::abs(a[piv][col].value())) piv = rr;
    if (a[piv][col].value() == Complex(0)) throw DomainError("singular metric matrix");
    if (piv != col)
      for (int k = 0; k < 8; ++k) std::swap(a[piv][k], a[col][k]);
    const Jet inv_p = recip(a[col][col]);
    for (int k = 0; k < 8; ++k) a[col][k] = inv_p * a[col][k];
    for (int rr = 0; rr < 4; ++rr) {
      if (rr == col) continue;
      const Jet f = a[rr][col];
      if (f.value() == Complex(0) && f.grad().isZero() && f.hess().isZero()) continue;
      for (int k = 0; k < 8; ++k) a[rr][k] -= f * a[col][k];
    }
  }
  JMat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = a[i][4 + j];
  return out;
}

}  // namespace ghpkerr
