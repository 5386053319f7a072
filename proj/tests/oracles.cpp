#include "oracles.hpp"

#include <Eigen/LU>

#include "ghpkerr/metric.hpp"
#include "ghpkerr/tetrad.hpp"

namespace ghpkerr::oracle {

namespace {

RVec4 shifted(const RVec4& x, int mu, double d) {
  RVec4 out = x;
  out[mu] += d;
  return out;
}

}  // namespace

Complex fd1(const ScalarFn& f, const RVec4& x, int mu, double h) {
  return (8.0 * (f(shifted(x, mu, h)) - f(shifted(x, mu, -h))) -
          (f(shifted(x, mu, 2 * h)) - f(shifted(x, mu, -2 * h)))) /
         (12.0 * h);
}

Complex fd2(const ScalarFn& f, const RVec4& x, int mu, int nu, double h) {
  if (mu == nu) {
    return (-f(shifted(x, mu, 2 * h)) + 16.0 * f(shifted(x, mu, h)) - 30.0 * f(x) +
            16.0 * f(shifted(x, mu, -h)) - f(shifted(x, mu, -2 * h))) /
           (12.0 * h * h);
  }
  const ScalarFn inner = [&f, mu, h](const RVec4& y) { return fd1(f, y, mu, h); };
  return fd1(inner, x, nu, h);
}

ScalarFn metric_component(const KerrParams& params, Chart chart, int i, int j) {
  return [params, chart, i, j](const RVec4& x) {
    SpacetimePoint p{chart, x};
    return metric_at(params, p).g(i, j).value();
  };
}

std::array<Eigen::Matrix4cd, 4> fd_christoffel(const KerrParams& params, Chart chart,
                                               const RVec4& x, double h) {
  Complex g[4][4], dg[4][4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const ScalarFn f = metric_component(params, chart, i, j);
      g[i][j] = g[j][i] = f(x);
      for (int mu = 0; mu < 4; ++mu) dg[i][j][mu] = dg[j][i][mu] = fd1(f, x, mu, h);
    }
  Eigen::Matrix4cd gm;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gm(i, j) = g[i][j];
  const Eigen::Matrix4cd gi = gm.inverse();

  std::array<Eigen::Matrix4cd, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        Complex v(0);
        for (int sg = 0; sg < 4; ++sg)
          v += gi(mu, sg) * (dg[sg][rho][nu] + dg[sg][nu][rho] - dg[nu][rho][sg]);
        out[mu](nu, rho) = 0.5 * v;
      }
  return out;
}

namespace {

CVec4 fd_cov_deriv_step(const KerrParams& params, Chart chart, const RVec4& x, const CVec4& X,
                        const VectorFn& Y, double h) {
  const auto gamma = fd_christoffel(params, chart, x, h);
  const CVec4 Yx = Y(x);
  CVec4 out;
  for (int mu = 0; mu < 4; ++mu) {
    Complex v(0);
    for (int nu = 0; nu < 4; ++nu) {
      const ScalarFn comp = [&Y, mu](const RVec4& y) { return Y(y)[mu]; };
      v += X[nu] * fd1(comp, x, nu, h);
      for (int rho = 0; rho < 4; ++rho) v += gamma[mu](nu, rho) * X[nu] * Yx[rho];
    }
    out[mu] = v;
  }
  return out;
}

}  // namespace

CVec4 fd_cov_deriv(const KerrParams& params, Chart chart, const RVec4& x, const CVec4& X,
                   const VectorFn& Y, double h) {
  // One Richardson step on the 4th-order stencil: (16 f(h/2) - f(h)) / 15.
  const CVec4 coarse = fd_cov_deriv_step(params, chart, x, X, Y, h);
  const CVec4 fine = fd_cov_deriv_step(params, chart, x, X, Y, h / 2);
  return (16.0 * fine - coarse) / 15.0;
}

VectorFn tetrad_component_fn(const KerrParams& params, Chart chart, Trivialization triv,
                             int which) {
  return [params, chart, triv, which](const RVec4& x) {
    JVec4 coords;
    for (int i = 0; i < 4; ++i) coords[i] = Jet(Complex(x[i]));
    const Tetrad tet = tetrad_jets(params, chart, coords, triv);
    switch (which) {
      case 0: return values(tet.l);
      case 1: return values(tet.n);
      default: return values(tet.m);
    }
  };
}

AbcValues fd_one_forms(const KerrParams& params, Chart chart, Trivialization triv, const RVec4& x,
                       const CVec4& X) {
  const VectorFn lf = tetrad_component_fn(params, chart, triv, 0);
  const VectorFn nf = tetrad_component_fn(params, chart, triv, 1);
  const VectorFn mf = tetrad_component_fn(params, chart, triv, 2);
  SpacetimePoint p{chart, x};
  const JMat4 g = metric_at(params, p).g;

  // Richardson across two step pairs.
  const double h = 1e-4;
  const CVec4 Dl = fd_cov_deriv(params, chart, x, X, lf, h);
  const CVec4 Dn = fd_cov_deriv(params, chart, x, X, nf, h);
  const CVec4 Dm = fd_cov_deriv(params, chart, x, X, mf, h);
  const CVec4 m = mf(x), n = nf(x);
  const CVec4 mb = m.conjugate();

  AbcValues out;
  out.b = -metric_pair_values(g, Dl, m);
  out.c = -metric_pair_values(g, Dn, mb);
  out.a = 0.5 * (metric_pair_values(g, Dl, n) - metric_pair_values(g, Dm, mb));
  return out;
}

std::array<double, 256> fd_riemann_lowered(const KerrParams& params, Chart chart, const RVec4& x) {
  const double h_inner = 1e-4;

  auto gamma_at = [&](const RVec4& y) { return fd_christoffel(params, chart, y, h_inner); };

  auto riemann_with_step = [&](double H) {
    std::array<Complex, 256> up{};
    std::array<std::array<Eigen::Matrix4cd, 4>, 8> shifts;
    for (int mu = 0; mu < 4; ++mu) {
      shifts[2 * mu] = gamma_at(shifted(x, mu, H));
      shifts[2 * mu + 1] = gamma_at(shifted(x, mu, -H));
    }
    const auto g0 = gamma_at(x);
    auto dgamma = [&](int m, int n, int r, int dir) {
      return (shifts[2 * dir][m](n, r) - shifts[2 * dir + 1][m](n, r)) / (2.0 * H);
    };
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s) {
            Complex v = dgamma(m, n, s, r) - dgamma(m, n, r, s);
            for (int lam = 0; lam < 4; ++lam)
              v += g0[m](r, lam) * g0[lam](n, s) - g0[m](s, lam) * g0[lam](n, r);
            up[Curvature::idx(m, n, r, s)] = v;
          }
    return up;
  };

  // Richardson for the (2nd-order) outer difference: (4 f(H/2) - f(H)) / 3.
  const auto coarse = riemann_with_step(2e-3);
  const auto fine = riemann_with_step(1e-3);
  std::array<Complex, 256> up{};
  for (int i = 0; i < 256; ++i) up[i] = (4.0 * fine[i] - coarse[i]) / 3.0;

  SpacetimePoint p{chart, x};
  const JMat4 g = metric_at(params, p).g;
  std::array<double, 256> low{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          Complex v(0);
          for (int lam = 0; lam < 4; ++lam)
            v += g(m, lam).value() * up[Curvature::idx(lam, n, r, s)];
          low[Curvature::idx(m, n, r, s)] = v.real();
        }
  return low;
}

Complex fd_psi2(const KerrParams& params, const RVec4& bl_coords) {
  const auto low = fd_riemann_lowered(params, Chart::BLAngular, bl_coords);
  const SpacetimePoint p{Chart::BLAngular, bl_coords};
  const Tetrad tet = kinnersley_at(params, p);
  const CVec4 l = values(tet.l), n = values(tet.n), m = values(tet.m);
  const CVec4 mb = m.conjugate();
  Complex out(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int s = 0; s < 4; ++s)
          out += l[i] * m[j] * mb[k] * n[s] * low[Curvature::idx(i, j, k, s)];
  return out;
}

Complex fd_G0_of_one(const KerrParams& params, const RVec4& bl_coords) {
  const Chart chart = Chart::BLAngular;
  const Trivialization triv = Trivialization::M;

  // Scalar coefficient fields evaluated by finite differences only.
  const auto forms_at = [&](const RVec4& y) {
    const VectorFn lf = tetrad_component_fn(params, chart, triv, 0);
    const VectorFn nf = tetrad_component_fn(params, chart, triv, 1);
    const VectorFn mf = tetrad_component_fn(params, chart, triv, 2);
    struct All {
      AbcValues l, n, m, mb;
    } out;
    out.l = fd_one_forms(params, chart, triv, y, lf(y));
    out.n = fd_one_forms(params, chart, triv, y, nf(y));
    out.m = fd_one_forms(params, chart, triv, y, mf(y));
    out.mb = fd_one_forms(params, chart, triv, y, mf(y).conjugate());
    return out;
  };

  const ScalarFn c_m = [&](const RVec4& y) { return forms_at(y).m.c; };
  const ScalarFn c_l = [&](const RVec4& y) { return forms_at(y).l.c; };

  const auto F = forms_at(bl_coords);
  const VectorFn lf = tetrad_component_fn(params, chart, triv, 0);
  const VectorFn mf = tetrad_component_fn(params, chart, triv, 2);
  const CVec4 l = lf(bl_coords), m = mf(bl_coords);

  // Directional derivatives of the coefficient fields (outer FD, h = 1e-3).
  const double H = 1e-3;
  Complex l_of_cm(0), m_of_cl(0);
  for (int mu = 0; mu < 4; ++mu) {
    if (l[mu] != Complex(0)) l_of_cm += l[mu] * fd1(c_m, bl_coords, mu, H);
    if (m[mu] != Complex(0)) m_of_cl += m[mu] * fd1(c_l, bl_coords, mu, H);
  }

  // thorn on weight (0,-1): (a(l) + conj a(l)) v + l(v), plus conj(b(mbar)) v.
  const Complex thorn_branch =
      (F.l.a + std::conj(F.l.a) + std::conj(F.mb.b)) * F.m.c + l_of_cm;
  // eth on weight (-1,0): (a(m) - conj a(mbar)) v + m(v), plus conj(c(l)) v.
  const Complex eth_branch =
      (F.m.a - std::conj(F.mb.a) + std::conj(F.l.c)) * F.l.c + m_of_cl;
  return thorn_branch - eth_branch;
}

}  // namespace ghpkerr::oracle
