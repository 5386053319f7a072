#include "ghpkerr/suites.hpp"

#include <cmath>

#include "ghpkerr/hopf.hpp"
#include "ghpkerr/np.hpp"
#include "ghpkerr/parallel.hpp"
#include "ghpkerr/rng.hpp"
#include "ghpkerr/teukolsky.hpp"
#include "ghpkerr/testfields.hpp"

namespace ghpkerr {

namespace {

struct PointResidual {
  double value = 0.0;
  RVec4 point = RVec4::Zero();
};

// Deterministic reduction: max with first-occurrence tie-break in index order.
SuiteResult reduce_max(const std::string& name, const std::vector<PointResidual>& rs, double tol,
                       bool as_rel = false) {
  SuiteResult out;
  out.name = name;
  double worst = -1.0;
  for (const auto& r : rs) {
    if (r.value > worst) {
      worst = r.value;
      out.worst_point = r.point;
    }
  }
  if (as_rel)
    out.max_rel = std::max(worst, 0.0);
  else
    out.max_abs = std::max(worst, 0.0);
  out.pass = worst < tol;
  return out;
}

}  // namespace

std::vector<SpacetimePoint> sample_points(const KerrParams& params, const SuiteOptions& opts) {
  Rng rng(opts.seed);
  std::vector<SpacetimePoint> pts;
  pts.reserve(static_cast<std::size_t>(opts.sample_points));
  for (int i = 0; i < opts.sample_points; ++i) {
    const double r = rng.uniform(params.r0() + opts.r_min_offset, opts.r_max);
    const double th = rng.uniform(0.2, M_PI - 0.2);
    const double ph = rng.uniform(0.05, 2.0 * M_PI - 0.05);
    const double t = rng.uniform(-5.0, 5.0);
    pts.push_back(SpacetimePoint::bl(t, r, th, ph));
  }
  return pts;
}

SuiteResult suite_ricci_flatness(const KerrParams& params, const SuiteOptions& opts) {
  const auto pts = sample_points(params, opts);
  std::vector<PointResidual> rs(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Curvature c = curvature_at(params, pts[i]);
    rs[i] = {c.ricci.cwiseAbs().maxCoeff(), pts[i].coords};
  });
  return reduce_max("ricci_flatness", rs, opts.tol_abs);
}

SuiteResult suite_tetrad_normalization(const KerrParams& params, const SuiteOptions& opts) {
  const auto pts = sample_points(params, opts);
  std::vector<PointResidual> rs(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Tetrad tet = kinnersley_at(params, pts[i]);
    rs[i] = {tetrad_residuals(params, pts[i], tet).max_abs(), pts[i].coords};
  });
  return reduce_max("tetrad_normalization", rs, 1e-10);
}

SuiteResult suite_spin_coefficient_vanishing(const KerrParams& params, const SuiteOptions& opts) {
  const auto pts = sample_points(params, opts);
  std::vector<PointResidual> rs(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const NPCoefficients np = np_table(params, pts[i], TetradField{});
    const double worst = std::max({std::abs(np.kappa), std::abs(np.sigma), std::abs(np.lambda),
                                   std::abs(np.nu)});
    rs[i] = {worst, pts[i].coords};
  });
  return reduce_max("spin_coefficient_vanishing", rs, opts.tol_abs);
}

SuiteResult suite_weyl_scalars(const KerrParams& params, const SuiteOptions& opts) {
  const auto pts = sample_points(params, opts);
  std::vector<PointResidual> zeros(pts.size());
  std::vector<PointResidual> rel(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Tetrad tet = kinnersley_at(params, pts[i]);
    const WeylScalars w = weyl_scalars(params, pts[i], tet);
    zeros[i] = {std::max({std::abs(w.psi0), std::abs(w.psi1), std::abs(w.psi3), std::abs(w.psi4)}),
                pts[i].coords};
    const double r = pts[i].coords[1], th = pts[i].coords[2];
    const double pabs = std::hypot(r, params.spin() * std::cos(th));
    const double target = params.mass() / (pabs * pabs * pabs);
    rel[i] = {std::abs(std::abs(w.psi2) - target) / target, pts[i].coords};
  });
  SuiteResult z = reduce_max("weyl_scalars", zeros, 1e-7);
  SuiteResult rr = reduce_max("weyl_psi2_rel", rel, opts.tol_rel, true);
  SuiteResult out = z;
  out.max_rel = rr.max_rel;
  out.pass = z.pass && rr.pass;
  if (rr.max_rel > 0 && !rr.pass) out.worst_point = rr.worst_point;
  return out;
}

namespace {

SpinWeightedField magical_lhs_minus_rhs(int n0, const SpinWeightedField& u,
                                        const KerrParams& params) {
  const Complex c1(1.0), cn(static_cast<double>(n0));
  // (thorn + n0 b(mbar) + conj b(mbar)) (eth + n0 b(n)) u
  SpinWeightedField inner1 = field_add(ghp_apply(GhpOp::Eth, u, params),
                                       field_mul_multiplier(params, Multiplier::BN, cn, u));
  SpinWeightedField lhs = field_add(
      ghp_apply(GhpOp::Thorn, inner1, params),
      field_add(field_mul_multiplier(params, Multiplier::BMbar, cn, inner1),
                field_mul_multiplier(params, Multiplier::ConjBMbar, c1, inner1)));
  // (eth + conj c(l) + n0 b(n)) (thorn + n0 b(mbar)) u
  SpinWeightedField inner2 = field_add(ghp_apply(GhpOp::Thorn, u, params),
                                       field_mul_multiplier(params, Multiplier::BMbar, cn, u));
  SpinWeightedField rhs = field_add(
      ghp_apply(GhpOp::Eth, inner2, params),
      field_add(field_mul_multiplier(params, Multiplier::ConjCL, c1, inner2),
                field_mul_multiplier(params, Multiplier::BN, cn, inner2)));
  return field_sub(lhs, rhs);
}

}  // namespace

SuiteResult suite_magical_relation(const KerrParams& params, const SuiteOptions& opts) {
  GridSpec grid;
  grid.r = opts.grid_r;
  auto pts = grid.points(params);
  // The identity is quantified over the seeded sample as well as the grid.
  const auto extra = sample_points(params, opts);
  pts.insert(pts.end(), extra.begin(), extra.end());
  std::vector<PointResidual> rs;
  for (int n0 = 1; n0 <= 4; ++n0) {
    const SpinWeightedField u = make_test_field({n0, n0}, opts.seed, static_cast<std::uint64_t>(n0));
    const SpinWeightedField diff = magical_lhs_minus_rhs(n0, u, params);
    const ComponentFn fn = diff.component(Trivialization::M);
    std::vector<PointResidual> local(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      local[i] = {std::abs(fn(lift(pts[i])).value()), pts[i].coords};
    });
    rs.insert(rs.end(), local.begin(), local.end());
  }
  return reduce_max("magical_relation", rs, opts.tol_abs);
}

SuiteResult suite_teukolsky_equivalence(const KerrParams& params, const SuiteOptions& opts) {
  GridSpec grid;
  grid.r = opts.grid_r;
  const auto pts = grid.points(params);
  std::vector<PointResidual> rs;
  for (int two_s : {0, 1, -1, 2, -2, 3, -3, 4, -4}) {
    const SpinWeightedField u =
        make_test_field({two_s, two_s}, opts.seed, static_cast<std::uint64_t>(100 + two_s));
    const SpinWeightedField lhs = apply_T(two_s, u, params);
    const ComponentFn lfn = lhs.component(Trivialization::M);
    const ComponentFn rfn = apply_T_closed_form(two_s, u.component(Trivialization::M), params);
    std::vector<PointResidual> local(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      const JVec4 c = lift(pts[i]);
      const Complex a = lfn(c).value(), b = rfn(c).value();
      const double rel = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
      local[i] = {rel, pts[i].coords};
    });
    rs.insert(rs.end(), local.begin(), local.end());
  }
  return reduce_max("teukolsky_equivalence", rs, opts.tol_rel, true);
}

SuiteResult suite_chart_consistency(const KerrParams& params, const SuiteOptions& opts) {
  // GHP outputs in the m- and N-trivializations at overlap points, compared
  // after the transition factor.
  std::vector<PointResidual> rs;
  const std::vector<SpacetimePoint> angular_pts = {
      SpacetimePoint::bl(0.3, 3.0, 1.1, 2.0), SpacetimePoint::bl(0.0, params.r0() + 0.6, 0.8, 4.1),
      SpacetimePoint::bl(1.2, 6.5, 2.1, 5.5), SpacetimePoint::bl(-0.7, 4.2, 1.7, 0.9)};
  int fidx = 0;
  for (const SpinWeight w : {SpinWeight{1, 1}, SpinWeight{2, 2}, SpinWeight{-3, 1}, SpinWeight{4, 0}}) {
    SpinWeightedField u = make_test_field(w, opts.seed, static_cast<std::uint64_t>(500 + fidx++));
    u = with_derived_component(u, Trivialization::M, Trivialization::N);
    for (const GhpOp op : {GhpOp::Thorn, GhpOp::ThornPrime, GhpOp::Eth, GhpOp::EthPrime}) {
      const SpinWeightedField out = ghp_apply(op, u, params);
      for (const auto& pa : angular_pts) {
        const SpacetimePoint pn = convert(params, pa, Chart::BLStereoN);
        const Complex in_m = out.eval(Trivialization::M, lift(pa)).value();
        const Complex in_n = out.eval(Trivialization::N, lift(pn)).value();
        const Complex transported =
            chart_transition(in_m, out.weight(), pa.coords[3], Trivialization::M, Trivialization::N);
        rs.push_back({std::abs(in_n - transported), pa.coords});
      }
    }
  }
  return reduce_max("chart_consistency", rs, opts.tol_abs);
}

SuiteResult suite_transition_stationarity(const KerrParams& params, const SuiteOptions& opts) {
  // The m->N transition ratio of a derived component must not depend on
  // (t, r): sampled over 20 pairs at a fixed sphere point.
  const SpinWeight w{3, 1};
  SpinWeightedField u = make_test_field(w, opts.seed, 900);
  u = with_derived_component(u, Trivialization::M, Trivialization::N);
  const double theta = 1.05, phi = 2.4;
  Rng rng(opts.seed ^ 0xABCDEF);
  Complex ref(0.0);
  std::vector<PointResidual> rs;
  for (int i = 0; i < 20; ++i) {
    const double t = rng.uniform(-10.0, 10.0);
    const double r = rng.uniform(params.r0() + 0.3, 18.0);
    const SpacetimePoint pa = SpacetimePoint::bl(t, r, theta, phi);
    const SpacetimePoint pn = convert(params, pa, Chart::BLStereoN);
    const Complex ratio =
        u.eval(Trivialization::N, lift(pn)).value() / u.eval(Trivialization::M, lift(pa)).value();
    if (i == 0)
      ref = ratio;
    else
      rs.push_back({std::abs(ratio - ref), pa.coords});
  }
  return reduce_max("transition_stationarity", rs, 1e-14);
}

SuiteResult suite_hopf(const KerrParams& params, const SuiteOptions& opts) {
  Rng rng(opts.seed ^ 0x40F5);
  std::vector<PointResidual> rs;
  const double t = 0.0, r = 3.0;
  auto random_unit = [&]() {
    Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return q.normalized();
  };
  for (int i = 0; i < 50; ++i) {
    const Quaternion h1 = random_unit(), h2 = random_unit();
    const double rho = rng.uniform(0.0, 2.0 * M_PI);

    // frame_map is a homomorphism.
    const Eigen::Matrix3d hom =
        frame_map(h1 * h2) - frame_map(h1) * frame_map(h2);
    rs.push_back({hom.cwiseAbs().maxCoeff(), RVec4(h1.a, h1.b, h1.c, h1.d)});

    // Fiber invariance of the Hopf map.
    const Quaternion g = u1_quaternion(rho);
    rs.push_back({(hopf_map(h1 * g) - hopf_map(h1)).cwiseAbs().maxCoeff(),
                  RVec4(h1.a, h1.b, h1.c, h1.d)});

    const SphereFrame fr = SphereFrame::from_matrix(frame_map(h1));
    if (std::abs(fr.omega[2]) > 0.93) continue;  // angular-basis pairing degenerates at poles

    // embed equivariance: f(frame . e^{i rho}) = e^{i rho} f(frame).
    const CVec4 m0 = embed_tetrad_m(params, t, r, fr).m;
    const CVec4 m1 = embed_tetrad_m(params, t, r, frame_act(fr, rho)).m;
    const Complex ph = std::polar(1.0, rho);
    rs.push_back({(m1 - ph * m0).cwiseAbs().maxCoeff(), RVec4(h1.a, h1.b, h1.c, h1.d)});

    // composite double cover: dtilde(x . g) = dtilde(x) . g^2.
    const SphereFrame fr2 = SphereFrame::from_matrix(frame_map(h1 * g));
    const CVec4 m2 = embed_tetrad_m(params, t, r, fr2).m;
    const Complex ph2 = std::polar(1.0, 2.0 * rho);
    rs.push_back({(m2 - ph2 * m0).cwiseAbs().maxCoeff(), RVec4(h1.a, h1.b, h1.c, h1.d)});

    // image satisfies the normalization conditions.
    const EmbeddedTetradM em = embed_tetrad_m(params, t, r, fr);
    const MetricValue g_at = metric_at(params, em.point);
    const Tetrad kin = kinnersley_at(params, em.point);
    Tetrad probe = kin;
    probe.m = lift_constant(em.m);
    rs.push_back({tetrad_residuals(g_at, probe).max_abs(), em.point.coords});
  }
  return reduce_max("hopf_suite", rs, 1e-10);
}

SuiteResult suite_horizon_regularity(const KerrParams& params, const SuiteOptions& opts) {
  std::vector<PointResidual> rs;
  for (double th : {0.6, 1.1, M_PI / 2, 2.3})
    for (double ph : {0.8, 2.9, 5.2}) {
      const SpacetimePoint p = SpacetimePoint::kerr_star(0.0, params.r0(), th, ph);
      const Tetrad tet = extended_tetrad_at(params, p);
      bool finite = true;
      for (int i = 0; i < 4; ++i)
        finite = finite && std::isfinite(std::abs(tet.l[i].value())) &&
                 std::isfinite(std::abs(tet.n[i].value())) && std::isfinite(std::abs(tet.m[i].value()));
      const double res = tetrad_residuals(params, p, tet).max_abs();
      rs.push_back({finite ? res : 1.0, p.coords});
    }
  (void)opts;
  return reduce_max("horizon_regularity", rs, 1e-9);
}

std::vector<SuiteResult> run_all_suites(const KerrParams& params, const SuiteOptions& opts) {
  return {suite_ricci_flatness(params, opts),
          suite_tetrad_normalization(params, opts),
          suite_spin_coefficient_vanishing(params, opts),
          suite_weyl_scalars(params, opts),
          suite_magical_relation(params, opts),
          suite_teukolsky_equivalence(params, opts),
          suite_chart_consistency(params, opts),
          suite_transition_stationarity(params, opts),
          suite_hopf(params, opts),
          suite_horizon_regularity(params, opts)};
}

}  // namespace ghpkerr
