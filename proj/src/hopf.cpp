#include "ghpkerr/hopf.hpp"

#include <cmath>

namespace ghpkerr {

Quaternion u1_quaternion(double rho) { return {std::cos(rho), -std::sin(rho), 0.0, 0.0}; }

namespace {

void require_unit(const Quaternion& h, double tol) {
  if (std::abs(h.norm() - 1.0) > tol) throw UsageError("quaternion must be unit length");
}

}  // namespace

Eigen::Vector3d hopf_map(const Quaternion& h, double tol) {
  require_unit(h, tol);
  return (h * Quaternion::unit_i() * h.conj()).imag();
}

Eigen::Matrix3d frame_map(const Quaternion& h, double tol) {
  require_unit(h, tol);
  Eigen::Matrix3d out;
  out.col(0) = (h * Quaternion{0, 1, 0, 0} * h.conj()).imag();
  out.col(1) = (h * Quaternion{0, 0, 1, 0} * h.conj()).imag();
  out.col(2) = (h * Quaternion{0, 0, 0, 1} * h.conj()).imag();
  return out;
}

SphereFrame frame_act(const SphereFrame& f, double rho) {
  const double c = std::cos(rho), s = std::sin(rho);
  return {f.omega, c * f.X - s * f.Y, s * f.X + c * f.Y};
}

void check_frame(const SphereFrame& f, double tol) {
  const bool ok = std::abs(f.omega.norm() - 1.0) < tol && std::abs(f.X.norm() - 1.0) < tol &&
                  std::abs(f.Y.norm() - 1.0) < tol && std::abs(f.X.dot(f.Y)) < tol &&
                  std::abs(f.X.dot(f.omega)) < tol && std::abs(f.Y.dot(f.omega)) < tol;
  if (!ok) throw UsageError("embed_tetrad_m requires an orthonormal tangent frame");
}

EmbeddedTetradM embed_tetrad_m(const KerrParams& params, double t, double r, const SphereFrame& f) {
  check_frame(f);
  const double theta = std::acos(std::min(1.0, std::max(-1.0, f.omega[2])));
  double phi = std::atan2(f.omega[1], f.omega[0]);
  if (phi < 0) phi += 2.0 * M_PI;

  const Complex p(r, params.spin() * f.omega[2]);
  const Complex sq2p = M_SQRT2 * p;
  const Eigen::Vector3cd V = f.X.cast<Complex>() + Complex(0, 1) * f.Y.cast<Complex>();

  // Tangent basis of the embedding, theta measured from e3.
  const Eigen::Vector3d theta_hat(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi),
                                  -std::sin(theta));
  const Eigen::Vector3d phi_hat(-std::sin(phi), std::cos(phi), 0.0);

  EmbeddedTetradM out;
  out.point = SpacetimePoint::bl(t, r, theta, phi);
  // <.,.> is the C-bilinear extension of the Euclidean product (not hermitian).
  const auto bilinear = [](const Eigen::Vector3cd& u, const Eigen::Vector3d& w) {
    return u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
  };
  out.m[0] = -Complex(0, 1) * params.spin() * V[2] / sq2p;
  out.m[1] = Complex(0.0);
  out.m[2] = bilinear(V, theta_hat) / sq2p;
  out.m[3] = bilinear(V, phi_hat) / (sq2p * std::sin(theta));
  return out;
}

}  // namespace ghpkerr
