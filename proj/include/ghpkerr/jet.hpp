#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Core>

#include "ghpkerr/errors.hpp"

namespace ghpkerr {

using Complex = std::complex<double>;

/// Order-2 forward-mode jet: a scalar together with its first and second
/// partial derivatives with respect to the four chart coordinates.
///
/// The scalar type is complex, but differentiation is with respect to the
/// (real) coordinates, so non-holomorphic primitives such as conj() and
/// abs2() act component-wise on the derivative slots. The Hessian is kept
/// symmetric by construction.
template <typename S>
class Jet2 {
 public:
  using Scalar = S;
  using Grad = Eigen::Matrix<S, 4, 1>;
  using Hess = Eigen::Matrix<S, 4, 4>;

  Jet2() : v_(S(0)), g_(Grad::Zero()), h_(Hess::Zero()) {}
  Jet2(const S& v) : v_(v), g_(Grad::Zero()), h_(Hess::Zero()) {}  // NOLINT: implicit lift of constants
  Jet2(double v) : Jet2(S(v)) {}
  Jet2(const S& v, const Grad& g, const Hess& h) : v_(v), g_(g), h_(h) {}

  static Jet2 constant(const S& v) { return Jet2(v); }

  /// Coordinate seed: value with unit first derivative in slot `index`.
  static Jet2 variable(int index, double value) {
    if (index < 0 || index > 3) throw UsageError("jet variable index out of range [0,3]");
    Jet2 j{S(value)};
    j.g_[index] = S(1);
    return j;
  }

  const S& value() const { return v_; }
  const Grad& grad() const { return g_; }
  const Hess& hess() const { return h_; }

  S& value() { return v_; }
  Grad& grad() { return g_; }
  Hess& hess() { return h_; }

  Jet2 operator-() const { return Jet2(-v_, -g_, -h_); }

  Jet2& operator+=(const Jet2& o) {
    v_ += o.v_; g_ += o.g_; h_ += o.h_;
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    v_ -= o.v_; g_ -= o.g_; h_ -= o.h_;
    return *this;
  }
  Jet2& operator*=(const Jet2& o) { *this = *this * o; return *this; }
  Jet2& operator/=(const Jet2& o) { *this = *this / o; return *this; }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) { return Jet2(a.v_ + b.v_, a.g_ + b.g_, a.h_ + b.h_); }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) { return Jet2(a.v_ - b.v_, a.g_ - b.g_, a.h_ - b.h_); }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    // Hessian entries are mirrored from one computation so symmetry holds to
    // exact equality (no reassociation of the rank-2 update).
    Hess h = a.v_ * b.h_ + b.v_ * a.h_;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const S upd = a.g_[i] * b.g_[j] + b.g_[i] * a.g_[j];
        h(i, j) += upd;
        if (i != j) h(j, i) += upd;
      }
    return Jet2(a.v_ * b.v_, a.v_ * b.g_ + b.v_ * a.g_, std::move(h));
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * recip(b); }

  friend bool operator==(const Jet2& a, const Jet2& b) {
    return a.v_ == b.v_ && a.g_ == b.g_ && a.h_ == b.h_;
  }
  friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

  /// First-derivative extraction as a jet. The result carries the value and
  /// gradient of d/dx_mu but a zero Hessian slot: each extraction consumes
  /// one differentiation order, so quantities built from it are exact to
  /// order one only.
  Jet2 partial(int mu) const {
    if (mu < 0 || mu > 3) throw UsageError("jet partial index out of range [0,3]");
    Jet2 out(g_[mu]);
    out.g_ = h_.row(mu).transpose();
    return out;
  }

  /// Multiplicative inverse; the jet value must be nonzero.
  friend Jet2 recip(const Jet2& x) {
    if (x.v_ == S(0)) throw DomainError("reciprocal of zero-valued jet");
    const S iv = S(1) / x.v_;
    return chain(x, iv, -iv * iv, S(2) * iv * iv * iv);
  }

  /// Chain rule for an analytic scalar function given f(v), f'(v), f''(v).
  friend Jet2 chain(const Jet2& x, const S& f0, const S& f1, const S& f2) {
    Hess h = f1 * x.h_;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const S upd = f2 * (x.g_[i] * x.g_[j]);
        h(i, j) += upd;
        if (i != j) h(j, i) += upd;
      }
    return Jet2(f0, f1 * x.g_, std::move(h));
  }

 private:
  S v_;
  Grad g_;
  Hess h_;
};

using Jet = Jet2<Complex>;

inline Jet operator+(const Complex& a, const Jet& b) { return Jet(a) + b; }
inline Jet operator+(const Jet& a, const Complex& b) { return a + Jet(b); }
inline Jet operator-(const Complex& a, const Jet& b) { return Jet(a) - b; }
inline Jet operator-(const Jet& a, const Complex& b) { return a - Jet(b); }
inline Jet operator*(const Complex& a, const Jet& b) { return Jet(a) * b; }
inline Jet operator*(const Jet& a, const Complex& b) { return a * Jet(b); }
inline Jet operator/(const Complex& a, const Jet& b) { return Jet(a) / b; }
inline Jet operator/(const Jet& a, const Complex& b) { return a / Jet(b); }
inline Jet operator+(double a, const Jet& b) { return Jet(Complex(a)) + b; }
inline Jet operator+(const Jet& a, double b) { return a + Jet(Complex(b)); }
inline Jet operator-(double a, const Jet& b) { return Jet(Complex(a)) - b; }
inline Jet operator-(const Jet& a, double b) { return a - Jet(Complex(b)); }
inline Jet operator*(double a, const Jet& b) { return Jet(Complex(a)) * b; }
inline Jet operator*(const Jet& a, double b) { return a * Jet(Complex(b)); }
inline Jet operator/(double a, const Jet& b) { return Jet(Complex(a)) / b; }
inline Jet operator/(const Jet& a, double b) { return a / Jet(Complex(b)); }

inline Jet sin(const Jet& x) {
  const Complex s = std::sin(x.value()), c = std::cos(x.value());
  return chain(x, s, c, -s);
}

inline Jet cos(const Jet& x) {
  const Complex s = std::sin(x.value()), c = std::cos(x.value());
  return chain(x, c, -s, -c);
}

inline Jet exp(const Jet& x) {
  const Complex e = std::exp(x.value());
  return chain(x, e, e, e);
}

inline Jet log(const Jet& x) {
  if (x.value() == Complex(0)) throw DomainError("log of zero-valued jet");
  const Complex iv = Complex(1) / x.value();
  return chain(x, std::log(x.value()), iv, -iv * iv);
}

/// Principal branch; callers keep arguments away from the cut (nonnegative
/// real part for real inputs).
inline Jet sqrt(const Jet& x) {
  const Complex s = std::sqrt(x.value());
  if (s == Complex(0)) throw DomainError("sqrt of zero-valued jet");
  const Complex d1 = Complex(0.5) / s;
  return chain(x, s, d1, Complex(-0.25) / (s * s * s));
}

inline Jet conj(const Jet& x) {
  return Jet(std::conj(x.value()), x.grad().conjugate(), x.hess().conjugate());
}

/// |z|^2 = z conj(z) as a smooth real-valued jet.
inline Jet abs2(const Jet& x) { return x * conj(x); }

inline Jet pow_int(const Jet& x, int n) {
  if (n == 0) return Jet(Complex(1));
  if (n < 0) return recip(pow_int(x, -n));
  Jet acc = x;
  for (int k = 1; k < n; ++k) acc = acc * x;
  return acc;
}

/// Extract the imaginary part as a real-valued jet. Valid only when the
/// underlying function of the real coordinates is the imaginary part of the
/// jet's function with real-jet inputs (R-linear projection).
inline Jet imag_part(const Jet& x) {
  Jet out(Complex(x.value().imag(), 0.0));
  for (int i = 0; i < 4; ++i) {
    out.grad()[i] = Complex(x.grad()[i].imag(), 0.0);
    for (int j = 0; j < 4; ++j) out.hess()(i, j) = Complex(x.hess()(i, j).imag(), 0.0);
  }
  return out;
}

/// atan2(y, x) for real-valued jets, branch in (-pi, pi].
inline Jet atan2(const Jet& y, const Jet& x) {
  const Jet z = x + Jet(Complex(0, 1)) * y;
  if (z.value() == Complex(0)) throw DomainError("atan2 at the origin");
  Jet phi = imag_part(log(z));
  phi.value() = Complex(std::atan2(y.value().real(), x.value().real()), 0.0);
  return phi;
}

/// acos for real-valued jets with |x| < 1.
inline Jet acos(const Jet& x) {
  const double xv = x.value().real();
  if (!(std::abs(xv) < 1.0)) throw DomainError("acos argument outside (-1,1)");
  const double s = std::sqrt(1.0 - xv * xv);
  return chain(x, Complex(std::acos(xv)), Complex(-1.0 / s), Complex(-xv / (s * s * s)));
}

}  // namespace ghpkerr

namespace Eigen {

template <typename S>
struct NumTraits<ghpkerr::Jet2<S>> : GenericNumTraits<ghpkerr::Jet2<S>> {
  using Real = ghpkerr::Jet2<S>;
  using NonInteger = ghpkerr::Jet2<S>;
  using Nested = ghpkerr::Jet2<S>;
  using Literal = double;
  enum {
    // Declared non-complex so the Real==T ScalarBinaryOpTraits specializations
    // do not collide; jet matrices are used for storage and linear ops only,
    // with conjugation handled by explicit free functions.
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    ReadCost = 21,
    AddCost = 42,
    MulCost = 120,
    RequireInitialization = 1,
  };
  static inline Real epsilon() { return Real(NumTraits<double>::epsilon()); }
  static inline Real dummy_precision() { return Real(NumTraits<double>::dummy_precision()); }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};

}  // namespace Eigen
