#include "jet_fd.hpp"

#include <cmath>

namespace ghpkerr::testing {

ExprPtr random_expr(Rng& rng, int max_depth) {
  auto e = std::make_shared<Expr>();
  if (max_depth <= 0) {
    if (rng.uniform() < 0.7) {
      e->kind = Expr::Coord;
      e->coord = rng.uniform_int(0, 3);
    } else {
      e->kind = Expr::Const;
      e->value = rng.uniform_complex() + Complex(0.5, 0.0);
    }
    return e;
  }
  const int pick = rng.uniform_int(0, 9);
  e->kind = static_cast<Expr::Kind>(pick + 2);  // Add..Abs2
  e->a = random_expr(rng, max_depth - 1);
  if (e->kind == Expr::Add || e->kind == Expr::Mul || e->kind == Expr::Div)
    e->b = random_expr(rng, max_depth - 1);
  return e;
}

Complex eval_plain(const ExprPtr& e, const RVec4& x) {
  switch (e->kind) {
    case Expr::Coord: return Complex(x[e->coord], 0.0);
    case Expr::Const: return e->value;
    case Expr::Add: return eval_plain(e->a, x) + eval_plain(e->b, x);
    case Expr::Mul: return eval_plain(e->a, x) * eval_plain(e->b, x);
    case Expr::Div: return eval_plain(e->a, x) / eval_plain(e->b, x);
    case Expr::Neg: return -eval_plain(e->a, x);
    case Expr::Sin: return std::sin(eval_plain(e->a, x));
    case Expr::Cos: return std::cos(eval_plain(e->a, x));
    case Expr::Sqrt: return std::sqrt(eval_plain(e->a, x));
    case Expr::Recip: return Complex(1.0) / eval_plain(e->a, x);
    case Expr::Conj: return std::conj(eval_plain(e->a, x));
    case Expr::Abs2: {
      const Complex v = eval_plain(e->a, x);
      return v * std::conj(v);
    }
  }
  return {};
}

Jet eval_jet(const ExprPtr& e, const RVec4& x) {
  switch (e->kind) {
    case Expr::Coord: return Jet::variable(e->coord, x[e->coord]);
    case Expr::Const: return Jet(e->value);
    case Expr::Add: return eval_jet(e->a, x) + eval_jet(e->b, x);
    case Expr::Mul: return eval_jet(e->a, x) * eval_jet(e->b, x);
    case Expr::Div: return eval_jet(e->a, x) / eval_jet(e->b, x);
    case Expr::Neg: return -eval_jet(e->a, x);
    case Expr::Sin: return sin(eval_jet(e->a, x));
    case Expr::Cos: return cos(eval_jet(e->a, x));
    case Expr::Sqrt: return sqrt(eval_jet(e->a, x));
    case Expr::Recip: return recip(eval_jet(e->a, x));
    case Expr::Conj: return conj(eval_jet(e->a, x));
    case Expr::Abs2: return abs2(eval_jet(e->a, x));
  }
  return {};
}

namespace {

// Keeps every node away from singular arguments and runaway growth so that
// finite differences on the stencil stay trustworthy.
bool check_node(const ExprPtr& e, const RVec4& x) {
  switch (e->kind) {
    case Expr::Div: return std::abs(eval_plain(e->b, x)) > 0.25;
    case Expr::Recip: return std::abs(eval_plain(e->a, x)) > 0.25;
    case Expr::Sqrt: return eval_plain(e->a, x).real() > 0.25;
    case Expr::Sin:
    case Expr::Cos: return std::abs(eval_plain(e->a, x)) < 4.0;
    default: return true;
  }
}

bool conditioned_rec(const ExprPtr& e, const RVec4& x) {
  if (e->a && !conditioned_rec(e->a, x)) return false;
  if (e->b && !conditioned_rec(e->b, x)) return false;
  if (!check_node(e, x)) return false;
  return std::abs(eval_plain(e, x)) < 60.0;
}

}  // namespace

bool well_conditioned(const ExprPtr& e, const RVec4& x, double radius) {
  if (!conditioned_rec(e, x)) return false;
  for (int mu = 0; mu < 4; ++mu)
    for (double d : {-1.0, 1.0}) {
      RVec4 y = x;
      y[mu] += d * radius;
      if (!conditioned_rec(e, y)) return false;
    }
  return true;
}

JetFdResult compare_jet_fd(const ExprPtr& e, const RVec4& x) {
  const Jet j = eval_jet(e, x);
  auto f = [&](const RVec4& y) { return eval_plain(e, y); };
  auto at = [&](const RVec4& y, int mu, double d) {
    RVec4 z = y;
    z[mu] += d;
    return z;
  };
  // 4th-order central stencils; the step balances truncation against
  // roundoff for composite expressions whose high derivatives grow fast.
  auto d1 = [&](const RVec4& y, int mu, double h) {
    return (8.0 * (f(at(y, mu, h)) - f(at(y, mu, -h))) -
            (f(at(y, mu, 2 * h)) - f(at(y, mu, -2 * h)))) /
           (12.0 * h);
  };
  auto d2_pure = [&](int mu, double h) {
    return (-f(at(x, mu, 2 * h)) + 16.0 * f(at(x, mu, h)) - 30.0 * f(x) + 16.0 * f(at(x, mu, -h)) -
            f(at(x, mu, -2 * h))) /
           (12.0 * h * h);
  };
  auto d2_mixed_step = [&](int mu, int nu, double h) {
    return (8.0 * (d1(at(x, nu, h), mu, h) - d1(at(x, nu, -h), mu, h)) -
            (d1(at(x, nu, 2 * h), mu, h) - d1(at(x, nu, -2 * h), mu, h))) /
           (12.0 * h);
  };

  const double h = 1e-3;
  JetFdResult out;
  double scale_g = 1e-8, scale_h = 1e-8;
  Complex fd_g[4], fd_h[4][4];
  for (int mu = 0; mu < 4; ++mu) {
    fd_g[mu] = d1(x, mu, h);
    scale_g = std::max(scale_g, std::abs(fd_g[mu]));
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      fd_h[mu][nu] = (mu == nu) ? d2_pure(mu, h) : d2_mixed_step(mu, nu, h);
      scale_h = std::max(scale_h, std::abs(fd_h[mu][nu]));
    }

  const double denom_g = std::max({scale_g, std::abs(j.value()), 1.0});
  const double denom_h = std::max({scale_h, scale_g, std::abs(j.value()), 1.0});
  for (int mu = 0; mu < 4; ++mu)
    out.max_rel_grad = std::max(out.max_rel_grad, std::abs(j.grad()[mu] - fd_g[mu]) / denom_g);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu)
      out.max_rel_hess =
          std::max(out.max_rel_hess, std::abs(j.hess()(mu, nu) - fd_h[mu][nu]) / denom_h);
  return out;
}

}  // namespace ghpkerr::testing
