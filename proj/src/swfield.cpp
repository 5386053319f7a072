#include "ghpkerr/swfield.hpp"

#include <cmath>

namespace ghpkerr {

namespace {

const Complex kI(0.0, 1.0);

// u_T = e^{i delta_T s phi} u_m with delta in {m: 0, N: -1, S: +1}.
int delta_rel_m(Trivialization t) {
  switch (t) {
    case Trivialization::M: return 0;
    case Trivialization::N: return -1;
    case Trivialization::S: return 1;
  }
  return 0;
}

}  // namespace

SpinWeight ghp_shift(GhpOp op, SpinWeight w) {
  switch (op) {
    case GhpOp::Thorn: return {w.two_s, w.two_w + 2};
    case GhpOp::ThornPrime: return {w.two_s, w.two_w - 2};
    case GhpOp::Eth: return {w.two_s + 2, w.two_w};
    case GhpOp::EthPrime: return {w.two_s - 2, w.two_w};
  }
  return w;
}

std::string ghp_name(GhpOp op) {
  switch (op) {
    case GhpOp::Thorn: return "thorn";
    case GhpOp::ThornPrime: return "thorn_prime";
    case GhpOp::Eth: return "eth";
    case GhpOp::EthPrime: return "eth_prime";
  }
  return "?";
}

Complex chart_transition(Complex value, SpinWeight weight, double phi, Trivialization from,
                         Trivialization to) {
  const int k = delta_rel_m(to) - delta_rel_m(from);
  if (k == 0) return value;
  return value * std::exp(kI * (0.5 * weight.two_s * k * phi));
}

Jet transition_factor(SpinWeight weight, const Jet& phi, Trivialization from, Trivialization to) {
  const int k = delta_rel_m(to) - delta_rel_m(from);
  if (k == 0 || weight.two_s == 0) return Jet(Complex(1.0));
  return exp(Jet(kI * (0.5 * weight.two_s * k)) * phi);
}

Complex SpinWeightedField::eval_value(Trivialization t, const SpacetimePoint& point) const {
  if (point.chart != natural_chart(t))
    throw UsageError("point chart does not match the trivialization's natural chart");
  return eval(t, lift(point)).value();
}

SpinWeightedField make_field(SpinWeight w, Trivialization t, ComponentFn fn) {
  SpinWeightedField f(w);
  f.set_component(t, std::move(fn));
  return f;
}

SpinWeightedField with_derived_component(const SpinWeightedField& f, Trivialization from,
                                         Trivialization to) {
  if (!f.has_component(from)) throw UsageError("no source component to derive from");
  SpinWeightedField out = f;
  if (from == to) return out;
  const SpinWeight w = f.weight();
  const ComponentFn src = f.component(from);

  // Evaluated at `to`-natural coordinates: map to `from`-natural coordinates
  // (as jets), evaluate, multiply by the transition phase.
  out.set_component(to, [src, w, from, to](const JVec4& coords) -> Jet {
    const Chart cf = natural_chart(from);
    const Chart ct = natural_chart(to);
    JVec4 mapped = coords;
    Jet phi;
    if (ct == Chart::BLAngular) {
      phi = phi_mod_2pi(coords[3]);
      if (cf != Chart::BLAngular) {
        Jet x, y;
        stereo_from_angular(coords[2], coords[3], cf == Chart::BLStereoN, x, y);
        mapped[2] = x;
        mapped[3] = y;
      }
    } else {
      const bool north_to = ct == Chart::BLStereoN;
      const AngularJets ang = angular_from_stereo(coords[2], coords[3], north_to);
      phi = ang.phi;
      if (cf == Chart::BLAngular) {
        mapped[2] = ang.theta;
        mapped[3] = ang.phi;
      } else if (cf != ct) {
        Jet x, y;
        stereo_from_angular(ang.theta, ang.phi, cf == Chart::BLStereoN, x, y);
        mapped[2] = x;
        mapped[3] = y;
      }
    }
    return transition_factor(w, phi, from, to) * src(mapped);
  });
  return out;
}

namespace {

// Single evaluation of a GHP operator on a component function, in one
// trivialization, at lifted coordinates of its natural chart.
Jet ghp_component_eval(GhpOp op, const KerrParams& params, Trivialization triv, SpinWeight wgt,
                       const ComponentFn& u, const JVec4& coords) {
  const Chart chart = natural_chart(triv);
  const PointGeometry geo = point_geometry(params, chart, coords);
  const Tetrad tet = tetrad_jets(params, chart, coords, triv);

  JVec4 X;
  Jet coeff;
  const Complex cw = Complex(-0.5 * (wgt.two_w + wgt.two_s));
  const Complex cwb = Complex(-0.5 * (wgt.two_w - wgt.two_s));
  switch (op) {
    case GhpOp::Thorn: {
      X = tet.l;
      const Jet al = one_forms(geo, tet, tet.l).a;
      coeff = Jet(cw) * al + Jet(cwb) * conj(al);
      break;
    }
    case GhpOp::ThornPrime: {
      X = tet.n;
      const Jet an = one_forms(geo, tet, tet.n).a;
      coeff = Jet(cw) * an + Jet(cwb) * conj(an);
      break;
    }
    case GhpOp::Eth: {
      X = tet.m;
      const Jet am = one_forms(geo, tet, tet.m).a;
      const Jet amb = one_forms(geo, tet, tet.mbar()).a;
      coeff = Jet(cw) * am + Jet(cwb) * conj(amb);
      break;
    }
    case GhpOp::EthPrime: {
      X = tet.mbar();
      const Jet am = one_forms(geo, tet, tet.m).a;
      const Jet amb = one_forms(geo, tet, tet.mbar()).a;
      coeff = Jet(cw) * amb + Jet(cwb) * conj(am);
      break;
    }
  }

  const Jet uj = u(coords);
  Jet out = coeff * uj;
  for (int mu = 0; mu < 4; ++mu) out += X[mu] * uj.partial(mu);
  return out;
}

}  // namespace

SpinWeightedField ghp_apply(GhpOp op, const SpinWeightedField& field, const KerrParams& params) {
  SpinWeightedField out(ghp_shift(op, field.weight()));
  bool any = false;
  for (Trivialization t : {Trivialization::M, Trivialization::N, Trivialization::S}) {
    if (!field.has_component(t)) continue;
    any = true;
    const ComponentFn inner = field.component(t);
    const SpinWeight w = field.weight();
    out.set_component(t, [op, params, t, w, inner](const JVec4& coords) {
      return ghp_component_eval(op, params, t, w, inner, coords);
    });
  }
  if (!any) throw UsageError("ghp_apply on a field with no components");
  return out;
}

SpinWeight multiplier_weight(Multiplier m) {
  switch (m) {
    case Multiplier::BMbar: return {0, 2};
    case Multiplier::BN: return {2, 0};
    case Multiplier::CL: return {-2, 0};
    case Multiplier::CM: return {0, -2};
    case Multiplier::ConjBMbar: return {0, 2};
    case Multiplier::ConjCL: return {2, 0};
  }
  return {0, 0};
}

Jet multiplier_jet(const KerrParams& params, Trivialization triv, const JVec4& coords,
                   Multiplier m) {
  const Chart chart = natural_chart(triv);
  const PointGeometry geo = point_geometry(params, chart, coords);
  const Tetrad tet = tetrad_jets(params, chart, coords, triv);
  switch (m) {
    case Multiplier::BMbar: return one_forms(geo, tet, tet.mbar()).b;
    case Multiplier::BN: return one_forms(geo, tet, tet.n).b;
    case Multiplier::CL: return one_forms(geo, tet, tet.l).c;
    case Multiplier::CM: return one_forms(geo, tet, tet.m).c;
    case Multiplier::ConjBMbar: return conj(one_forms(geo, tet, tet.mbar()).b);
    case Multiplier::ConjCL: return conj(one_forms(geo, tet, tet.l).c);
  }
  throw UsageError("unknown multiplier");
}

WeightedMultipliers weighted_multipliers(const KerrParams& params, const SpacetimePoint& point,
                                         Trivialization triv) {
  if (point.chart != natural_chart(triv))
    throw UsageError("point chart does not match the trivialization's natural chart");
  check_domain(params, point);
  const JVec4 coords = lift(point);
  WeightedMultipliers out;
  out.b_mbar = multiplier_jet(params, triv, coords, Multiplier::BMbar).value();
  out.b_n = multiplier_jet(params, triv, coords, Multiplier::BN).value();
  out.c_l = multiplier_jet(params, triv, coords, Multiplier::CL).value();
  out.c_m = multiplier_jet(params, triv, coords, Multiplier::CM).value();
  return out;
}

SpinWeightedField field_add(const SpinWeightedField& a, const SpinWeightedField& b) {
  if (a.weight() != b.weight()) throw UsageError("weight mismatch in field addition");
  SpinWeightedField out(a.weight());
  for (Trivialization t : {Trivialization::M, Trivialization::N, Trivialization::S}) {
    if (!a.has_component(t) || !b.has_component(t)) continue;
    const ComponentFn fa = a.component(t), fb = b.component(t);
    out.set_component(t, [fa, fb](const JVec4& c) { return fa(c) + fb(c); });
  }
  return out;
}

SpinWeightedField field_sub(const SpinWeightedField& a, const SpinWeightedField& b) {
  return field_add(a, field_scale(Complex(-1.0), b));
}

SpinWeightedField field_scale(Complex c, const SpinWeightedField& a) {
  SpinWeightedField out(a.weight());
  for (Trivialization t : {Trivialization::M, Trivialization::N, Trivialization::S}) {
    if (!a.has_component(t)) continue;
    const ComponentFn fa = a.component(t);
    out.set_component(t, [fa, c](const JVec4& co) { return Jet(c) * fa(co); });
  }
  return out;
}

SpinWeightedField field_mul_multiplier(const KerrParams& params, Multiplier m, Complex coeff,
                                       const SpinWeightedField& a) {
  SpinWeightedField out(a.weight() + multiplier_weight(m));
  for (Trivialization t : {Trivialization::M, Trivialization::N, Trivialization::S}) {
    if (!a.has_component(t)) continue;
    const ComponentFn fa = a.component(t);
    out.set_component(t, [params, m, coeff, t, fa](const JVec4& co) {
      return Jet(coeff) * multiplier_jet(params, t, co, m) * fa(co);
    });
  }
  return out;
}

}  // namespace ghpkerr
