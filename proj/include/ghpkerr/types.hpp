#pragma once

#include <Eigen/Core>

#include "ghpkerr/jet.hpp"

namespace ghpkerr {

using JVec4 = Eigen::Matrix<Jet, 4, 1>;
using JMat4 = Eigen::Matrix<Jet, 4, 4>;
using CVec4 = Eigen::Vector4cd;
using CMat4 = Eigen::Matrix4cd;
using RVec4 = Eigen::Vector4d;

inline CVec4 values(const JVec4& v) {
  return CVec4(v[0].value(), v[1].value(), v[2].value(), v[3].value());
}

inline JVec4 lift_constant(const CVec4& v) {
  JVec4 out;
  for (int i = 0; i < 4; ++i) out[i] = Jet(v[i]);
  return out;
}

inline JVec4 conj(const JVec4& v) {
  JVec4 out;
  for (int i = 0; i < 4; ++i) out[i] = conj(v[i]);
  return out;
}

}  // namespace ghpkerr
