#include <doctest.h>

#include "ghpkerr/rng.hpp"
#include "jet_fd.hpp"

using namespace ghpkerr;
namespace gt = ghpkerr::testing;

TEST_CASE("coordinate lift seeds the right slots") {
  const Jet j = Jet::variable(1, 3.0);
  CHECK(j.value() == Complex(3.0));
  CHECK(j.grad()[0] == Complex(0.0));
  CHECK(j.grad()[1] == Complex(1.0));
  CHECK(j.grad()[2] == Complex(0.0));
  CHECK(j.hess().isZero(0.0));

  const Jet c = Jet::constant(Complex(2.5, -1.0));
  CHECK(c.grad().isZero(0.0));
  CHECK(c.hess().isZero(0.0));

  CHECK_THROWS_AS(Jet::variable(4, 1.0), UsageError);
  CHECK_THROWS_AS(Jet::variable(-1, 1.0), UsageError);
}

TEST_CASE("product rule, first order") {
  const Jet t = Jet::variable(0, 2.0);
  const Jet r = Jet::variable(1, 7.0);
  const Jet p = t * r;
  CHECK(p.grad()[0] == Complex(7.0));
  CHECK(p.grad()[1] == Complex(2.0));
  CHECK(p.grad()[2] == Complex(0.0));
  CHECK(p.hess()(0, 1) == Complex(1.0));
  CHECK(p.hess()(1, 0) == Complex(1.0));
}

TEST_CASE("elementary functions at pinned points") {
  const Jet s = sin(Jet::variable(2, 0.0));
  CHECK(s.value() == Complex(0.0));
  CHECK(s.grad()[2] == Complex(1.0));

  const Jet rc = recip(Jet::constant(Complex(2.0)));
  CHECK(rc.value() == Complex(0.5));
  CHECK(rc.grad().isZero(0.0));

  const Jet sq = sqrt(Jet::variable(1, 4.0));
  CHECK(sq.value().real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sq.grad()[1].real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(sq.hess()(1, 1).real() == doctest::Approx(-1.0 / 32.0).epsilon(1e-13));
}

TEST_CASE("division by a zero-valued jet is a domain error") {
  const Jet z = Jet::variable(0, 0.0);
  CHECK_THROWS_AS(recip(z), DomainError);
  CHECK_THROWS_AS(Jet(Complex(1.0)) / z, DomainError);
}

TEST_CASE("conjugation acts slotwise") {
  Rng rng(0xC0FFEE);
  for (int k = 0; k < 50; ++k) {
    gt::ExprPtr e = gt::random_expr(rng, 4);
    const RVec4 x(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                  rng.uniform(0.5, 2.0));
    if (!gt::well_conditioned(e, x, 0.01)) continue;
    const Jet j = gt::eval_jet(e, x);
    const Jet cj = conj(j);
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(cj.grad()[mu] == std::conj(j.grad()[mu]));
      for (int nu = 0; nu < 4; ++nu) CHECK(cj.hess()(mu, nu) == std::conj(j.hess()(mu, nu)));
    }
  }
}

TEST_CASE("hessian stays symmetric through composite expressions") {
  Rng rng(0xBEEF);
  for (int k = 0; k < 100; ++k) {
    gt::ExprPtr e = gt::random_expr(rng, 5);
    const RVec4 x(rng.uniform(0.4, 2.5), rng.uniform(0.4, 2.5), rng.uniform(0.4, 2.5),
                  rng.uniform(0.4, 2.5));
    if (!gt::well_conditioned(e, x, 0.01)) continue;
    const Jet j = gt::eval_jet(e, x);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) CHECK(j.hess()(mu, nu) == j.hess()(nu, mu));
  }
}

TEST_CASE("abs2 equals the squared modulus with real value") {
  const Jet z = Jet::variable(0, 1.5) + Complex(0.0, 1.0) * Jet::variable(1, -0.5);
  const Jet a = abs2(z);
  CHECK(a.value().real() == doctest::Approx(1.5 * 1.5 + 0.25).epsilon(1e-15));
  CHECK(a.value().imag() == doctest::Approx(0.0));
}

TEST_CASE("jet derivatives match 4th-order finite differences") {
  Rng rng(0xC0FFEE);
  int tested = 0;
  double worst_g = 0, worst_h = 0;
  while (tested < 300) {
    gt::ExprPtr e = gt::random_expr(rng, rng.uniform_int(1, 6));
    const RVec4 x(rng.uniform(0.4, 2.5), rng.uniform(0.4, 2.5), rng.uniform(0.4, 2.5),
                  rng.uniform(0.4, 2.5));
    if (!gt::well_conditioned(e, x, 0.01)) continue;
    const auto res = gt::compare_jet_fd(e, x);
    worst_g = std::max(worst_g, res.max_rel_grad);
    worst_h = std::max(worst_h, res.max_rel_hess);
    ++tested;
  }
  CHECK(worst_g < 1e-6);
  CHECK(worst_h < 1e-6);
}

TEST_CASE("atan2 and acos jets match finite differences") {
  auto f = [](const RVec4& x) {
    return ghpkerr::atan2(Jet::variable(1, x[1]), Jet::variable(0, x[0]));
  };
  const RVec4 x(0.8, -1.3, 0, 0);
  const Jet j = f(x);
  const double h = 1e-5;
  const double d0 = (std::atan2(x[1], x[0] + h) - std::atan2(x[1], x[0] - h)) / (2 * h);
  const double d1 = (std::atan2(x[1] + h, x[0]) - std::atan2(x[1] - h, x[0])) / (2 * h);
  CHECK(j.grad()[0].real() == doctest::Approx(d0).epsilon(1e-8));
  CHECK(j.grad()[1].real() == doctest::Approx(d1).epsilon(1e-8));

  const Jet ac = ghpkerr::acos(Jet::variable(2, 0.3));
  const double da = (std::acos(0.3 + h) - std::acos(0.3 - h)) / (2 * h);
  CHECK(ac.grad()[2].real() == doctest::Approx(da).epsilon(1e-8));
  CHECK_THROWS_AS(ghpkerr::acos(Jet::variable(0, 1.2)), DomainError);
}
