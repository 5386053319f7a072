#pragma once

#include <array>

#include "ghpkerr/metric.hpp"

namespace ghpkerr {

/// Christoffel symbols Gamma^mu_{nu rho} as jets. Values and first
/// derivatives are exact (they consume the metric's first and second
/// derivatives); the Hessian slots are not populated.
struct Christoffels {
  std::array<JMat4, 4> G;  // G[mu](nu, rho), symmetric in (nu, rho)
};

Christoffels christoffel_jets(const MetricValue& metric);

/// Value-level query: Gamma at a point (real components).
std::array<Eigen::Matrix4d, 4> christoffel_at(const KerrParams& params, const SpacetimePoint& point);

/// Riemann and Ricci tensors at a point (values). For Kerr the Ricci tensor
/// vanishes, so the fully-lowered Riemann tensor equals the Weyl tensor.
struct Curvature {
  std::array<double, 256> riemann_up;   // R^mu_{nu rho sigma}
  std::array<double, 256> riemann_low;  // R_{mu nu rho sigma}
  Eigen::Matrix4d ricci;

  static int idx(int m, int n, int r, int s) { return ((m * 4 + n) * 4 + r) * 4 + s; }
  double up(int m, int n, int r, int s) const { return riemann_up[idx(m, n, r, s)]; }
  double low(int m, int n, int r, int s) const { return riemann_low[idx(m, n, r, s)]; }
};

Curvature curvature_at(const KerrParams& params, const SpacetimePoint& point);
Curvature curvature_from(const MetricValue& metric, const Christoffels& gamma);

/// Kretschmann scalar R_{abcd} R^{abcd}.
double kretschmann(const MetricValue& metric, const Curvature& curv);

/// (nabla_X Y)^mu = X^nu d_nu Y^mu + Gamma^mu_{nu rho} X^nu Y^rho with the
/// connection extended complex-linearly in X. Y is a jet evaluation of the
/// field at the point (its gradient carries d Y).
CVec4 covariant_derivative_at(const KerrParams& params, const SpacetimePoint& point, const CVec4& X,
                              const JVec4& Y);

/// Jet-valued covariant derivative (exact to first order).
JVec4 cov_deriv_jet(const Christoffels& gamma, const JVec4& X, const JVec4& Y);

}  // namespace ghpkerr
