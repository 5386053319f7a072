#pragma once

#include <cstdint>

#include "ghpkerr/swfield.hpp"

namespace ghpkerr {

/// Seeded smooth test fields u(t, r, theta, phi) = P(t, r) * T(theta, phi)
/// with P a degree <= 2 complex polynomial and T a trigonometric polynomial
/// of degree <= 3 in (cos theta, sin theta, e^{i phi}). Components are
/// attached in the m-trivialization; other trivializations derive by
/// transition. `index` decorrelates several fields drawn from one seed.
SpinWeightedField make_test_field(SpinWeight weight, std::uint64_t seed, std::uint64_t index = 0);

/// The raw component function (BL-angular coordinates).
ComponentFn make_test_component(std::uint64_t seed, std::uint64_t index = 0);

/// Constant field u == c of the given weight (m-trivialization).
SpinWeightedField make_constant_field(SpinWeight weight, Complex c);

}  // namespace ghpkerr
