#include "ghpkerr/testfields.hpp"

#include <array>

#include "ghpkerr/rng.hpp"

namespace ghpkerr {

ComponentFn make_test_component(std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  std::array<Complex, 6> poly;
  for (auto& c : poly) c = rng.uniform_complex();
  struct Term {
    Complex coeff;
    int cos_pow, sin_pow, k;
  };
  std::array<Term, 4> terms;
  for (auto& term : terms) {
    term.coeff = rng.uniform_complex();
    term.cos_pow = rng.uniform_int(0, 3);
    term.sin_pow = rng.uniform_int(0, 3 - term.cos_pow);
    term.k = rng.uniform_int(-3, 3);
  }
  return [poly, terms](const JVec4& c) -> Jet {
    const Jet& t = c[0];
    const Jet& r = c[1];
    const Jet& th = c[2];
    const Jet& ph = c[3];
    const Jet P = Jet(poly[0]) + Jet(poly[1]) * t + Jet(poly[2]) * r + Jet(poly[3]) * t * t +
                  Jet(poly[4]) * t * r + Jet(poly[5]) * r * r;
    const Jet cth = cos(th), sth = sin(th);
    Jet T(Complex(0));
    for (const auto& term : terms) {
      Jet factor(term.coeff);
      factor = factor * pow_int(cth, term.cos_pow) * pow_int(sth, term.sin_pow);
      if (term.k != 0) factor = factor * exp(Jet(Complex(0, term.k)) * ph);
      T += factor;
    }
    return P * T;
  };
}

SpinWeightedField make_test_field(SpinWeight weight, std::uint64_t seed, std::uint64_t index) {
  return make_field(weight, Trivialization::M, make_test_component(seed, index));
}

SpinWeightedField make_constant_field(SpinWeight weight, Complex c) {
  return make_field(weight, Trivialization::M, [c](const JVec4&) { return Jet(c); });
}

}  // namespace ghpkerr
