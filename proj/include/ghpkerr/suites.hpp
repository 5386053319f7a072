#pragma once

#include "ghpkerr/chart.hpp"
#include "ghpkerr/report.hpp"

namespace ghpkerr {

struct SuiteOptions {
  int sample_points = 200;
  std::uint64_t seed = 0xC0FFEE;
  double tol_abs = 1e-8;
  double tol_rel = 1e-6;
  double r_min_offset = 0.1;
  double r_max = 20.0;
  std::vector<double> grid_r;  // empty -> {r0 + 0.5, 3, 5, 10}
};

/// Seeded exterior sample in BL-angular coordinates, mid-latitude band.
std::vector<SpacetimePoint> sample_points(const KerrParams& params, const SuiteOptions& opts);

SuiteResult suite_ricci_flatness(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_tetrad_normalization(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_spin_coefficient_vanishing(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_weyl_scalars(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_magical_relation(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_teukolsky_equivalence(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_chart_consistency(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_transition_stationarity(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_hopf(const KerrParams& params, const SuiteOptions& opts);
SuiteResult suite_horizon_regularity(const KerrParams& params, const SuiteOptions& opts);

/// Every suite above, in a fixed order.
std::vector<SuiteResult> run_all_suites(const KerrParams& params, const SuiteOptions& opts);

}  // namespace ghpkerr
