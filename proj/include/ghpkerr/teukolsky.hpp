#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghpkerr/swfield.hpp"

namespace ghpkerr {

/// G_s = (thorn + 2s b(mbar) + conj(b(mbar)))(thorn' + c(m))
///     - (eth + conj(c(l)) + 2s b(n))(eth' + c(l))
/// acting on B(s, s); the field's weight must equal (s, s).
SpinWeightedField apply_G(int two_s, const SpinWeightedField& field, const KerrParams& params);

/// T_s = 2 G_s + 4 (s-1)(s-1/2) Psi_2, with Psi_2 computed from curvature.
SpinWeightedField apply_T(int two_s, const SpinWeightedField& field, const KerrParams& params);

/// The closed-form second-order operator on the m-trivialization component
/// u(t, r, theta, phi) (every term applied by jets, then divided by
/// rho^2 = r^2 + a^2 cos^2 theta). The input must carry exact second
/// derivatives.
ComponentFn apply_T_closed_form(int two_s, ComponentFn component, const KerrParams& params);

struct GridSpec {
  std::vector<double> t{0.0};
  std::vector<double> r;       // empty -> {r0 + 0.5, 3, 5, 10}
  std::vector<double> theta{M_PI / 6, M_PI / 3, M_PI / 2, 2 * M_PI / 3, 5 * M_PI / 6};
  std::vector<double> phi{M_PI / 4, M_PI, 7 * M_PI / 4};

  std::vector<SpacetimePoint> points(const KerrParams& params) const;
};

struct SuiteConfig {
  std::uint64_t seed = 0xC0FFEE;
  int fields_per_weight = 2;
  GridSpec grid;
  double tol_abs = 1e-8;
  double tol_rel = 1e-6;
};

/// Deterministic residual report over a grid sweep; reductions are taken in
/// point-index order, so outcomes do not depend on scheduling.
struct OperatorReport {
  int two_s = 0;
  std::string grid_description;
  struct Entry {
    std::string name;
    double max_abs = 0.0;
    double max_rel = 0.0;
    RVec4 worst_point = RVec4::Zero();
    Complex worst_lhs{0.0};
    Complex worst_rhs{0.0};
    bool pass = true;
  };
  std::vector<Entry> entries;
  bool pass() const;
};

/// Residuals of (i) the commutation identity on B(n0/2, n0/2) with n0 = 2s,
/// (ii) the GHP-assembled T_s against its closed form, and (iii) for
/// s >= 1/2, the factorization of G_s through the two first-order component
/// operators applied to a synthetic field pair.
OperatorReport identity_residuals(int two_s, const KerrParams& params, const SuiteConfig& config);

/// Shared helper: max |lhs - rhs| and relative counterpart of two component
/// functions over grid points, with denominator max(|lhs|, |rhs|, 1e-30).
OperatorReport::Entry compare_components(const std::string& name, const ComponentFn& lhs,
                                         const ComponentFn& rhs,
                                         const std::vector<SpacetimePoint>& pts, double tol_abs,
                                         double tol_rel, bool relative);

}  // namespace ghpkerr
