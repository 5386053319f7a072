#pragma once

#include "ghpkerr/chart.hpp"
#include "ghpkerr/kerr.hpp"
#include "ghpkerr/types.hpp"

namespace ghpkerr {

/// Metric and inverse metric components in a chart basis, jet-lifted in the
/// chart coordinates. Components are real-valued; storage is complex jets so
/// they enter complexified pairings directly.
struct MetricValue {
  JMat4 g;
  JMat4 ginv;
};

/// Kerr metric in the point's chart. Each chart uses a hand-derived closed
/// form; the Kerr-star form is free of 1/Delta_r and regular across r = r0.
MetricValue metric_at(const KerrParams& params, const SpacetimePoint& point);

/// Same, but at already-lifted coordinates (used when composing operators).
MetricValue metric_jets(const KerrParams& params, Chart chart, const JVec4& coords);

/// Complex-bilinear pairing g(X, Y).
Jet metric_pair(const JMat4& g, const JVec4& X, const JVec4& Y);
Complex metric_pair_values(const JMat4& g, const CVec4& X, const CVec4& Y);

/// Gauss-Jordan inverse of a 4x4 jet matrix (pivot on value magnitude).
JMat4 inverse4(const JMat4& m);

}  // namespace ghpkerr
