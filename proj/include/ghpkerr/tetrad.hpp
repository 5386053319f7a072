#pragma once

#include <array>
#include <string>

#include "ghpkerr/chart.hpp"
#include "ghpkerr/metric.hpp"

namespace ghpkerr {

/// Local trivializations of the reduced tetrad bundle, labelled by the
/// rotation applied to the Kinnersley m: the m-section itself (branch cut at
/// phi = 0 for half-integer weights), and the north/south stereographic
/// sections m_N = e^{-i phi} m, m_S = e^{+i phi} m.
enum class Trivialization { M, N, S };

Chart natural_chart(Trivialization t);
std::string trivialization_name(Trivialization t);

/// Principal null tetrad at a point; components in a chart basis, jets in
/// that chart's coordinates. l and n are real (zero imaginary part).
struct Tetrad {
  JVec4 l, n, m;
  JVec4 mbar() const { return conj(m); }
};

/// Kinnersley family evaluated in `chart` with the m-rotation of `triv`.
/// In the Kerr-star chart the horizon-regular rescaling (Delta_r l,
/// Delta_r^{-1} n) is used.
Tetrad tetrad_jets(const KerrParams& params, Chart chart, const JVec4& coords, Trivialization triv);

/// The Kinnersley tetrad (m-trivialization) at a Boyer-Lindquist point.
Tetrad kinnersley_at(const KerrParams& params, const SpacetimePoint& point);

/// Horizon-regular tetrad (Delta_r l, Delta_r^{-1} n, m) at a Kerr-star point.
Tetrad extended_tetrad_at(const KerrParams& params, const SpacetimePoint& point);

/// C* x Z/2 action: (l, n, m) -> (|z| l, |z|^{-1} n, (z/|z|) m), then an
/// optional swap (l, n, m) -> (n, l, mbar). z must be nonzero.
Tetrad act_tetrad(const Tetrad& tet, Complex z, bool swap);

/// The ten independent inner products minus their target values.
struct TetradResiduals {
  std::array<std::pair<std::string, Complex>, 10> entries;
  double max_abs() const;
};

TetradResiduals tetrad_residuals(const KerrParams& params, const SpacetimePoint& point,
                                 const Tetrad& tet);
TetradResiduals tetrad_residuals(const MetricValue& metric, const Tetrad& tet);

/// Kinnersley family plus the group action, as a jet-capable field for the
/// connection one-forms.
struct TetradField {
  Trivialization triv = Trivialization::M;
  Complex z = Complex(1.0);
  bool swap = false;
};

Tetrad tetrad_field_at(const KerrParams& params, const TetradField& field, Chart chart,
                       const JVec4& coords);

/// Sign of det((n+l)/sqrt(2), Re m, -Im m, (l-n)/sqrt(2)) in the chart basis.
/// Recorded for cross-chart consistency checks only.
int orientation_sign(const MetricValue& metric, const Tetrad& tet);

}  // namespace ghpkerr
