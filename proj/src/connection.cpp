#include "ghpkerr/connection.hpp"

namespace ghpkerr {

Christoffels christoffel_jets(const MetricValue& metric) {
  const JMat4& g = metric.g;
  const JMat4& gi = metric.ginv;
  Christoffels out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = nu; rho < 4; ++rho) {
        Complex val(0);
        Eigen::Vector4cd der = Eigen::Vector4cd::Zero();
        for (int sg = 0; sg < 4; ++sg) {
          const Complex br = g(sg, rho).grad()[nu] + g(sg, nu).grad()[rho] - g(nu, rho).grad()[sg];
          const Eigen::Vector4cd br_d = g(sg, rho).hess().row(nu).transpose() +
                                        g(sg, nu).hess().row(rho).transpose() -
                                        g(nu, rho).hess().row(sg).transpose();
          val += gi(mu, sg).value() * br;
          der += gi(mu, sg).grad() * br + gi(mu, sg).value() * br_d;
        }
        Jet j(0.5 * val);
        j.grad() = 0.5 * der;
        out.G[mu](nu, rho) = j;
        out.G[mu](rho, nu) = j;
      }
  return out;
}

std::array<Eigen::Matrix4d, 4> christoffel_at(const KerrParams& params, const SpacetimePoint& point) {
  const Christoffels c = christoffel_jets(metric_at(params, point));
  std::array<Eigen::Matrix4d, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) out[mu](nu, rho) = c.G[mu](nu, rho).value().real();
  return out;
}

Curvature curvature_from(const MetricValue& metric, const Christoffels& gamma) {
  Curvature out;
  // R^mu_{nu rho sg} = d_rho G^mu_{nu sg} - d_sg G^mu_{nu rho} + G G - G G
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sg = 0; sg < 4; ++sg) {
          Complex val = gamma.G[mu](nu, sg).grad()[rho] - gamma.G[mu](nu, rho).grad()[sg];
          for (int lam = 0; lam < 4; ++lam)
            val += gamma.G[mu](rho, lam).value() * gamma.G[lam](nu, sg).value() -
                   gamma.G[mu](sg, lam).value() * gamma.G[lam](nu, rho).value();
          out.riemann_up[Curvature::idx(mu, nu, rho, sg)] = val.real();
        }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int sg = 0; sg < 4; ++sg) {
          double val = 0;
          for (int lam = 0; lam < 4; ++lam)
            val += metric.g(mu, lam).value().real() * out.riemann_up[Curvature::idx(lam, nu, rho, sg)];
          out.riemann_low[Curvature::idx(mu, nu, rho, sg)] = val;
        }
  for (int nu = 0; nu < 4; ++nu)
    for (int sg = 0; sg < 4; ++sg) {
      double val = 0;
      for (int mu = 0; mu < 4; ++mu) val += out.riemann_up[Curvature::idx(mu, nu, mu, sg)];
      out.ricci(nu, sg) = val;
    }
  return out;
}

Curvature curvature_at(const KerrParams& params, const SpacetimePoint& point) {
  const MetricValue m = metric_at(params, point);
  return curvature_from(m, christoffel_jets(m));
}

double kretschmann(const MetricValue& metric, const Curvature& curv) {
  Eigen::Matrix4d gi;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gi(i, j) = metric.ginv(i, j).value().real();
  double total = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double up = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                  up += gi(a, i) * gi(b, j) * gi(c, k) * gi(d, l) * curv.low(i, j, k, l);
          total += curv.low(a, b, c, d) * up;
        }
  return total;
}

CVec4 covariant_derivative_at(const KerrParams& params, const SpacetimePoint& point, const CVec4& X,
                              const JVec4& Y) {
  const Christoffels gamma = christoffel_jets(metric_at(params, point));
  CVec4 out;
  for (int mu = 0; mu < 4; ++mu) {
    Complex v(0);
    for (int nu = 0; nu < 4; ++nu) {
      v += X[nu] * Y[mu].grad()[nu];
      for (int rho = 0; rho < 4; ++rho)
        v += gamma.G[mu](nu, rho).value() * X[nu] * Y[rho].value();
    }
    out[mu] = v;
  }
  return out;
}

JVec4 cov_deriv_jet(const Christoffels& gamma, const JVec4& X, const JVec4& Y) {
  JVec4 out;
  for (int mu = 0; mu < 4; ++mu) {
    Jet v(Complex(0));
    for (int nu = 0; nu < 4; ++nu) {
      v += X[nu] * Y[mu].partial(nu);
      for (int rho = 0; rho < 4; ++rho) v += gamma.G[mu](nu, rho) * X[nu] * Y[rho];
    }
    out[mu] = v;
  }
  return out;
}

}  // namespace ghpkerr
