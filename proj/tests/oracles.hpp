#pragma once

// Finite-difference oracles, independent of the jet propagation path: they
// consume only value-level evaluations and differentiate numerically.

#include <functional>

#include "ghpkerr/np.hpp"

namespace ghpkerr::oracle {

using ScalarFn = std::function<Complex(const RVec4&)>;
using VectorFn = std::function<CVec4(const RVec4&)>;

/// 4th-order central first derivative in coordinate mu.
Complex fd1(const ScalarFn& f, const RVec4& x, int mu, double h);

/// 4th-order central second derivative (mu == nu uses the 5-point second
/// stencil; mixed partials compose two first-derivative stencils).
Complex fd2(const ScalarFn& f, const RVec4& x, int mu, int nu, double h);

/// Metric component value function for a chart.
ScalarFn metric_component(const KerrParams& params, Chart chart, int i, int j);

/// Christoffel values from finite differences of the metric.
std::array<Eigen::Matrix4cd, 4> fd_christoffel(const KerrParams& params, Chart chart,
                                               const RVec4& x, double h);

/// Richardson-extrapolated covariant derivative (nabla_X Y) from value-level
/// data, using steps h and h/2.
CVec4 fd_cov_deriv(const KerrParams& params, Chart chart, const RVec4& x, const CVec4& X,
                   const VectorFn& Y, double h);

/// Tetrad component value functions (Kinnersley family).
VectorFn tetrad_component_fn(const KerrParams& params, Chart chart, Trivialization triv,
                             int which);  // 0 = l, 1 = n, 2 = m

/// One-form values (a, b, c)(X) via the finite-difference covariant
/// derivative; Richardson over four step sizes.
struct AbcValues {
  Complex a, b, c;
};
AbcValues fd_one_forms(const KerrParams& params, Chart chart, Trivialization triv, const RVec4& x,
                       const CVec4& X);

/// Riemann (lowered) from nested finite differences of the Christoffels,
/// Richardson-extrapolated; accurate to roughly 1e-8 relative.
std::array<double, 256> fd_riemann_lowered(const KerrParams& params, Chart chart, const RVec4& x);

/// psi2 from the finite-difference curvature.
Complex fd_psi2(const KerrParams& params, const RVec4& bl_coords);

/// G_0 applied to the constant 1 via a finite-difference composition of the
/// two first-order operator branches (no jets anywhere).
Complex fd_G0_of_one(const KerrParams& params, const RVec4& bl_coords);

}  // namespace ghpkerr::oracle
