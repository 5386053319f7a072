#pragma once

#include <Eigen/Dense>

#include "ghpkerr/chart.hpp"

namespace ghpkerr {

/// Hamilton quaternion a + bi + cj + dk with ij = k, jk = i, ki = j.
struct Quaternion {
  double a = 1, b = 0, c = 0, d = 0;

  static Quaternion unit_i() { return {0, 1, 0, 0}; }

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  double norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
  Quaternion normalized() const {
    const double n = norm();
    if (n == 0) throw UsageError("cannot normalize the zero quaternion");
    return {a / n, b / n, c / n, d / n};
  }
  Eigen::Vector3d imag() const { return {b, c, d}; }
};

/// Fiber coordinate along U(1): the phase e^{i rho} acts on S^3 by right
/// multiplication with (cos rho - i sin rho). The conjugate embedding keeps
/// the frame double cover and the tetrad embedding equivariant on the nose.
Quaternion u1_quaternion(double rho);

/// H(h) = coordinates of h i h* in the (i, j, k) basis. Requires |h| = 1.
Eigen::Vector3d hopf_map(const Quaternion& h, double tol = 1e-9);

/// Columns are h i h*, h j h*, h k h*; special orthogonal for unit h.
Eigen::Matrix3d frame_map(const Quaternion& h, double tol = 1e-9);

/// Oriented orthonormal tangent frame (omega; X, Y) on the unit sphere.
struct SphereFrame {
  Eigen::Vector3d omega, X, Y;

  static SphereFrame from_matrix(const Eigen::Matrix3d& m) {
    return {m.col(0), m.col(1), m.col(2)};
  }
};

/// U(1) action on frames: X + iY -> e^{i rho} (X + iY).
SphereFrame frame_act(const SphereFrame& f, double rho);

/// Throws UsageError unless (X, Y) is an orthonormal tangent pair at omega.
void check_frame(const SphereFrame& f, double tol = 1e-9);

/// m-vector of the frame at radius r:
///   -i a <X + iY, e3> / (sqrt(2) p) d_t + (X + i Y) / (sqrt(2) p)
/// with p = r + i a <omega, e3>, returned in the BL-angular basis together
/// with the base point.
struct EmbeddedTetradM {
  SpacetimePoint point;
  CVec4 m;
};
EmbeddedTetradM embed_tetrad_m(const KerrParams& params, double t, double r, const SphereFrame& f);

}  // namespace ghpkerr
