#include <doctest.h>

#include "ghpkerr/hopf.hpp"
#include "ghpkerr/metric.hpp"
#include "ghpkerr/rng.hpp"
#include "ghpkerr/tetrad.hpp"

using namespace ghpkerr;

namespace {
const KerrParams kKerr(1.0, 0.5);

Quaternion random_unit(Rng& rng) {
  Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return q.normalized();
}
}  // namespace

TEST_CASE("Hamilton relations") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  const Quaternion ij = i * j;
  CHECK(ij.d == doctest::Approx(1.0));
  CHECK(std::abs(ij.a) + std::abs(ij.b) + std::abs(ij.c) == doctest::Approx(0.0));
  const Quaternion ji = j * i;
  CHECK(ji.d == doctest::Approx(-1.0));
  const Quaternion jk = j * k;
  CHECK(jk.b == doctest::Approx(1.0));
  const Quaternion ki = k * i;
  CHECK(ki.c == doctest::Approx(1.0));

  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    Quaternion p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Quaternion q{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
  }
}

TEST_CASE("hopf map basics") {
  CHECK((hopf_map({1, 0, 0, 0}) - Eigen::Vector3d(1, 0, 0)).norm() == doctest::Approx(0.0));
  CHECK((hopf_map({0, 0, 1, 0}) - Eigen::Vector3d(-1, 0, 0)).norm() == doctest::Approx(0.0));
  // fiber invariance along the U(1) direction
  Rng rng(2);
  for (int n = 0; n < 20; ++n) {
    const Quaternion h = random_unit(rng);
    const double rho = rng.uniform(0, 2 * M_PI);
    CHECK((hopf_map(h * u1_quaternion(rho)) - hopf_map(h)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(hopf_map({1, 1, 0, 0}), UsageError);
}

TEST_CASE("hopf map reaches a 100-point sphere sample within mesh 0.2") {
  Rng rng(0xC0FFEE);
  std::vector<Eigen::Vector3d> images;
  for (int n = 0; n < 2000; ++n) images.push_back(hopf_map(random_unit(rng)));
  Rng rng2(0xFACE);
  for (int n = 0; n < 100; ++n) {
    Eigen::Vector3d target(rng2.uniform(-1, 1), rng2.uniform(-1, 1), rng2.uniform(-1, 1));
    if (target.norm() < 0.2) continue;
    target.normalize();
    double best = 1e9;
    for (const auto& im : images) best = std::min(best, (im - target).norm());
    CHECK(best < 0.2);
  }
}

TEST_CASE("frame map: identity, orthogonality, homomorphism, fiber rotation") {
  const Eigen::Matrix3d id = frame_map({1, 0, 0, 0});
  CHECK((id - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  Rng rng(3);
  for (int n = 0; n < 20; ++n) {
    const Quaternion h1 = random_unit(rng), h2 = random_unit(rng);
    const Eigen::Matrix3d f = frame_map(h1);
    CHECK((f * f.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(f.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((frame_map(h1 * h2) - frame_map(h1) * frame_map(h2)).cwiseAbs().maxCoeff() < 1e-12);

    // right action: tangent columns rotate by angle 2 rho, base point fixed
    const double rho = rng.uniform(0, 2 * M_PI);
    const Eigen::Matrix3d g = frame_map(h1 * u1_quaternion(rho));
    CHECK((g.col(0) - f.col(0)).norm() < 1e-12);
    const Eigen::Vector3d want1 = std::cos(2 * rho) * f.col(1) - std::sin(2 * rho) * f.col(2);
    const Eigen::Vector3d want2 = std::sin(2 * rho) * f.col(1) + std::cos(2 * rho) * f.col(2);
    CHECK((g.col(1) - want1).norm() < 1e-12);
    CHECK((g.col(2) - want2).norm() < 1e-12);
  }
}

TEST_CASE("embedded m satisfies the normalization conditions") {
  Rng rng(4);
  int done = 0;
  while (done < 50) {
    const Quaternion h = random_unit(rng);
    const Eigen::Matrix3d f = frame_map(h);
    if (std::abs(f(2, 0)) > 0.93) continue;  // stay off the axis for the angular pairing
    const EmbeddedTetradM em = embed_tetrad_m(kKerr, 0.2, 3.0, SphereFrame::from_matrix(f));
    const MetricValue g = metric_at(kKerr, em.point);
    const JVec4 m = lift_constant(em.m);
    const JVec4 mb = conj(m);
    CHECK(std::abs(metric_pair(g.g, m, m).value()) < 1e-10);
    CHECK(std::abs(metric_pair(g.g, m, mb).value() + 1.0) < 1e-10);
    const Tetrad kin = kinnersley_at(kKerr, em.point);
    CHECK(std::abs(metric_pair(g.g, kin.l, m).value()) < 1e-10);
    CHECK(std::abs(metric_pair(g.g, kin.n, m).value()) < 1e-10);
    ++done;
  }
}

TEST_CASE("equivariance and the composite double cover") {
  Rng rng(5);
  int done = 0;
  while (done < 30) {
    const Quaternion h = random_unit(rng);
    const Eigen::Matrix3d f = frame_map(h);
    if (std::abs(f(2, 0)) > 0.93) continue;
    const SphereFrame fr = SphereFrame::from_matrix(f);
    const double rho = rng.uniform(0, 2 * M_PI);
    const CVec4 m0 = embed_tetrad_m(kKerr, 0.0, 3.0, fr).m;

    const CVec4 m1 = embed_tetrad_m(kKerr, 0.0, 3.0, frame_act(fr, rho)).m;
    CHECK((m1 - std::polar(1.0, rho) * m0).cwiseAbs().maxCoeff() < 1e-12);

    const SphereFrame fr2 = SphereFrame::from_matrix(frame_map(h * u1_quaternion(rho)));
    const CVec4 m2 = embed_tetrad_m(kKerr, 0.0, 3.0, fr2).m;
    CHECK((m2 - std::polar(1.0, 2 * rho) * m0).cwiseAbs().maxCoeff() < 1e-10);
    ++done;
  }
}

TEST_CASE("frame validation") {
  SphereFrame bad;
  bad.omega = Eigen::Vector3d(0, 0, 1);
  bad.X = Eigen::Vector3d(1, 0, 0);
  bad.Y = Eigen::Vector3d(0.2, 1, 0);  // not orthogonal
  CHECK_THROWS_AS(embed_tetrad_m(kKerr, 0, 3.0, bad), UsageError);
}
