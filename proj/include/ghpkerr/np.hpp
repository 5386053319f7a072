#pragma once

#include "ghpkerr/connection.hpp"
#include "ghpkerr/tetrad.hpp"

namespace ghpkerr {

/// Metric and Christoffels bundled per evaluation point.
struct PointGeometry {
  Chart chart;
  JVec4 coords;
  MetricValue metric;
  Christoffels gamma;
};

PointGeometry point_geometry(const KerrParams& params, Chart chart, const JVec4& coords);

/// Connection one-forms of a normalized tetrad section, evaluated on a
/// complexified direction X:
///   b(X) = -g(nabla_X l, m)
///   c(X) = -g(nabla_X n, mbar)
///   a(X) = (g(nabla_X l, n) - g(nabla_X m, mbar)) / 2
/// Jets are exact to first order (one metric-derivative order is consumed).
struct OneForms {
  Jet a, b, c;
};

OneForms one_forms(const PointGeometry& geo, const Tetrad& tet, const JVec4& X);

/// Point query: (a, b, c) values for a direction X given in the point's
/// chart basis.
struct OneFormValues {
  Complex a, b, c;
};
OneFormValues one_forms_abc(const KerrParams& params, const SpacetimePoint& point,
                            const TetradField& field, const CVec4& X);

struct NPCoefficients {
  Complex kappa, tau, sigma, rho;
  Complex pi, nu, mu, lambda;
  Complex epsilon, gamma, beta, alpha;
};

/// The twelve spin coefficients assembled from the one-forms:
///   kappa=-b(l)  tau=-b(n)  sigma=-b(m)  rho=-b(mbar)
///   pi=c(l)      nu=c(n)    mu=c(m)      lambda=c(mbar)
///   epsilon=a(l) gamma=a(n) beta=a(m)    alpha=a(mbar)
NPCoefficients np_table(const KerrParams& params, const SpacetimePoint& point,
                        const TetradField& field);

struct WeylScalars {
  Complex psi0, psi1, psi2, psi3, psi4;
};

/// Contractions of the lowered Weyl tensor (equal to the lowered Riemann
/// tensor on Ricci-flat Kerr) against the tetrad:
///   psi0 = W(l,m,l,m)   psi1 = W(l,m,l,n)   psi2 = W(l,m,mbar,n)
///   psi3 = W(l,n,mbar,n) psi4 = W(mbar,n,mbar,n)
/// The psi2 slot pattern (l,m,mbar,n) is the one whose magnitude equals
/// M/|p|^3 on Kerr; the repeated-m contraction vanishes identically on a
/// principal tetrad.
WeylScalars weyl_scalars(const KerrParams& params, const SpacetimePoint& point, const Tetrad& tet);
WeylScalars weyl_from(const Curvature& curv, const Tetrad& tet);

/// psi2 value at arbitrary (possibly jet-lifted) coordinates; used by the
/// Teukolsky assembly, which never differentiates it.
Complex psi2_value(const KerrParams& params, Chart chart, const JVec4& coords);

}  // namespace ghpkerr
