#include "ghpkerr/np.hpp"

namespace ghpkerr {

PointGeometry point_geometry(const KerrParams& params, Chart chart, const JVec4& coords) {
  PointGeometry out;
  out.chart = chart;
  out.coords = coords;
  out.metric = metric_jets(params, chart, coords);
  out.gamma = christoffel_jets(out.metric);
  return out;
}

OneForms one_forms(const PointGeometry& geo, const Tetrad& tet, const JVec4& X) {
  const JVec4 mb = tet.mbar();
  const JVec4 Dl = cov_deriv_jet(geo.gamma, X, tet.l);
  const JVec4 Dn = cov_deriv_jet(geo.gamma, X, tet.n);
  const JVec4 Dm = cov_deriv_jet(geo.gamma, X, tet.m);
  OneForms out;
  out.b = -metric_pair(geo.metric.g, Dl, tet.m);
  out.c = -metric_pair(geo.metric.g, Dn, mb);
  out.a = (metric_pair(geo.metric.g, Dl, tet.n) - metric_pair(geo.metric.g, Dm, mb)) * Jet(Complex(0.5));
  return out;
}

OneFormValues one_forms_abc(const KerrParams& params, const SpacetimePoint& point,
                            const TetradField& field, const CVec4& X) {
  check_domain(params, point);
  const JVec4 coords = lift(point);
  const PointGeometry geo = point_geometry(params, point.chart, coords);
  const Tetrad tet = tetrad_field_at(params, field, point.chart, coords);
  const OneForms f = one_forms(geo, tet, lift_constant(X));
  return {f.a.value(), f.b.value(), f.c.value()};
}

NPCoefficients np_table(const KerrParams& params, const SpacetimePoint& point,
                        const TetradField& field) {
  check_domain(params, point);
  const JVec4 coords = lift(point);
  const PointGeometry geo = point_geometry(params, point.chart, coords);
  const Tetrad tet = tetrad_field_at(params, field, point.chart, coords);
  const OneForms fl = one_forms(geo, tet, tet.l);
  const OneForms fn = one_forms(geo, tet, tet.n);
  const OneForms fm = one_forms(geo, tet, tet.m);
  const OneForms fmb = one_forms(geo, tet, tet.mbar());
  NPCoefficients np;
  np.kappa = -fl.b.value();
  np.tau = -fn.b.value();
  np.sigma = -fm.b.value();
  np.rho = -fmb.b.value();
  np.pi = fl.c.value();
  np.nu = fn.c.value();
  np.mu = fm.c.value();
  np.lambda = fmb.c.value();
  np.epsilon = fl.a.value();
  np.gamma = fn.a.value();
  np.beta = fm.a.value();
  np.alpha = fmb.a.value();
  return np;
}

namespace {

Complex weyl_contract(const Curvature& curv, const CVec4& A, const CVec4& B, const CVec4& C,
                      const CVec4& D) {
  Complex out(0);
  for (int i = 0; i < 4; ++i) {
    if (A[i] == Complex(0)) continue;
    for (int j = 0; j < 4; ++j) {
      if (B[j] == Complex(0)) continue;
      const Complex ab = A[i] * B[j];
      for (int k = 0; k < 4; ++k) {
        if (C[k] == Complex(0)) continue;
        const Complex abc = ab * C[k];
        for (int l = 0; l < 4; ++l) out += abc * D[l] * curv.low(i, j, k, l);
      }
    }
  }
  return out;
}

}  // namespace

WeylScalars weyl_from(const Curvature& curv, const Tetrad& tet) {
  const CVec4 l = values(tet.l), n = values(tet.n), m = values(tet.m);
  const CVec4 mb = m.conjugate();
  WeylScalars w;
  w.psi0 = weyl_contract(curv, l, m, l, m);
  w.psi1 = weyl_contract(curv, l, m, l, n);
  w.psi2 = weyl_contract(curv, l, m, mb, n);
  w.psi3 = weyl_contract(curv, l, n, mb, n);
  w.psi4 = weyl_contract(curv, mb, n, mb, n);
  return w;
}

WeylScalars weyl_scalars(const KerrParams& params, const SpacetimePoint& point, const Tetrad& tet) {
  return weyl_from(curvature_at(params, point), tet);
}

Complex psi2_value(const KerrParams& params, Chart chart, const JVec4& coords) {
  // Value-level only: strip derivative seeds before building curvature.
  JVec4 plain;
  for (int i = 0; i < 4; ++i) plain[i] = Jet::variable(i, coords[i].value().real());
  const MetricValue metric = metric_jets(params, chart, plain);
  const Curvature curv = curvature_from(metric, christoffel_jets(metric));
  const Tetrad tet = tetrad_jets(params, chart, plain, Trivialization::M);
  return weyl_from(curv, tet).psi2;
}

}  // namespace ghpkerr
