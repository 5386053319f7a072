#pragma once

#include <functional>
#include <optional>

#include "ghpkerr/np.hpp"

namespace ghpkerr {

/// Half-integer weight pair stored doubled so the bookkeeping stays exact.
struct SpinWeight {
  int two_s = 0;
  int two_w = 0;

  double s() const { return 0.5 * two_s; }
  double w() const { return 0.5 * two_w; }

  friend bool operator==(SpinWeight a, SpinWeight b) {
    return a.two_s == b.two_s && a.two_w == b.two_w;
  }
  friend bool operator!=(SpinWeight a, SpinWeight b) { return !(a == b); }
  friend SpinWeight operator+(SpinWeight a, SpinWeight b) {
    return {a.two_s + b.two_s, a.two_w + b.two_w};
  }
};

enum class GhpOp { Thorn, ThornPrime, Eth, EthPrime };

/// thorn: (s, w+1); thorn': (s, w-1); eth: (s+1, w); eth': (s-1, w).
SpinWeight ghp_shift(GhpOp op, SpinWeight w);
std::string ghp_name(GhpOp op);

/// Transition factor multiplying a component when re-expressed in another
/// trivialization: u_N = e^{-i s phi} u_m, u_S = e^{+i s phi} u_m, hence
/// u_N = e^{-2 i s phi} u_S. A pure phase depending only on s and phi.
Complex chart_transition(Complex value, SpinWeight weight, double phi, Trivialization from,
                         Trivialization to);
Jet transition_factor(SpinWeight weight, const Jet& phi, Trivialization from, Trivialization to);

/// A component function evaluated at jet-lifted coordinates of the owning
/// trivialization's natural chart.
using ComponentFn = std::function<Jet(const JVec4&)>;

/// A spin-weighted field as per-trivialization component functions.
/// Evaluation is lazy and jet-capable; no gridded storage.
class SpinWeightedField {
 public:
  SpinWeightedField() = default;
  explicit SpinWeightedField(SpinWeight w) : weight_(w) {}

  SpinWeight weight() const { return weight_; }

  void set_component(Trivialization t, ComponentFn fn) { comp_[index(t)] = std::move(fn); }
  bool has_component(Trivialization t) const { return static_cast<bool>(comp_[index(t)]); }

  Jet eval(Trivialization t, const JVec4& coords) const {
    const auto& fn = comp_[index(t)];
    if (!fn) throw UsageError("field has no component in trivialization " + trivialization_name(t));
    return fn(coords);
  }
  Complex eval_value(Trivialization t, const SpacetimePoint& point) const;
  const ComponentFn& component(Trivialization t) const {
    const auto& fn = comp_[index(t)];
    if (!fn) throw UsageError("field has no component in trivialization " + trivialization_name(t));
    return fn;
  }

 private:
  static int index(Trivialization t) { return static_cast<int>(t); }
  SpinWeight weight_;
  std::array<ComponentFn, 3> comp_;
};

SpinWeightedField make_field(SpinWeight w, Trivialization t, ComponentFn fn);

/// Adds a component in `to` derived from an existing one by the chart map
/// and the transition factor.
SpinWeightedField with_derived_component(const SpinWeightedField& f, Trivialization from,
                                         Trivialization to);

/// GHP operator applied componentwise in every trivialization the field
/// carries. The local formula in a trivialization (o, iota) with tetrad
/// (l, n, m) reads, e.g. for thorn on weight (s, w):
///   (thorn u)_1 = (-(w+s) a(l) - (w-s) conj(a(l))) u_1 + l(u_1)
/// with a from the connection one-forms of that trivialization's tetrad.
SpinWeightedField ghp_apply(GhpOp op, const SpinWeightedField& field, const KerrParams& params);

/// Weighted multiplier fields entering the Teukolsky assembly.
enum class Multiplier { BMbar, BN, CL, CM, ConjBMbar, ConjCL };

SpinWeight multiplier_weight(Multiplier m);
Jet multiplier_jet(const KerrParams& params, Trivialization triv, const JVec4& coords, Multiplier m);

/// Point query: the four multipliers evaluated at a point, with weight tags
/// b(mbar):(0,1)  b(n):(1,0)  c(l):(-1,0)  c(m):(0,-1).
struct WeightedMultipliers {
  Complex b_mbar, b_n, c_l, c_m;
  static constexpr SpinWeight b_mbar_weight{0, 2};
  static constexpr SpinWeight b_n_weight{2, 0};
  static constexpr SpinWeight c_l_weight{-2, 0};
  static constexpr SpinWeight c_m_weight{0, -2};
};

WeightedMultipliers weighted_multipliers(const KerrParams& params, const SpacetimePoint& point,
                                         Trivialization triv);

// Field algebra used by the operator assemblies.
SpinWeightedField field_add(const SpinWeightedField& a, const SpinWeightedField& b);
SpinWeightedField field_sub(const SpinWeightedField& a, const SpinWeightedField& b);
SpinWeightedField field_scale(Complex c, const SpinWeightedField& a);
SpinWeightedField field_mul_multiplier(const KerrParams& params, Multiplier m, Complex coeff,
                                       const SpinWeightedField& a);

}  // namespace ghpkerr
