#pragma once

// Seeded generators for the property tests. Every test builds its own engine from a
// fixed seed so failures reproduce.

#include "vortexmod/genus0.hpp"
#include "vortexmod/symring.hpp"

#include <random>
#include <vector>

namespace testgen {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline vortexmod::Rational small_rational(Engine& rng, int bound = 5) {
  const int num = uniform(rng, -bound, bound);
  const int den = uniform(rng, 1, 3);
  return vortexmod::Rational(num, den);
}

/// Random monomial of the free algebra with degree <= 2d.
inline vortexmod::symring::Monomial monomial(Engine& rng, vortexmod::symring::RingParams p) {
  vortexmod::symring::Monomial m;
  const int target = uniform(rng, 0, 2 * p.d);
  for (int j = 1; j <= 2 * p.g; ++j) {
    if (static_cast<int>(m.xi.size()) < target && uniform(rng, 0, 2) == 0) m.xi.push_back(j);
  }
  m.eta_power = (target - static_cast<int>(m.xi.size())) / 2;
  return m;
}

/// Sum of a few random monomials with small rational coefficients.
inline vortexmod::symring::FreeClass free_class(Engine& rng, vortexmod::symring::RingParams p, int terms = 3) {
  vortexmod::symring::FreeClass out(p);
  for (int k = 0; k < terms; ++k) out.add_term(monomial(rng, p), small_rational(rng));
  return out;
}

/// Nonzero binary form of the given degree with small integer coefficients.
inline vortexmod::genus0::BinaryForm binary_form(Engine& rng, int degree) {
  std::vector<vortexmod::Rational> c(static_cast<std::size_t>(degree) + 1);
  do {
    for (auto& x : c) x = uniform(rng, -5, 5);
  } while (vortexmod::genus0::BinaryForm(degree, c).is_zero());
  return vortexmod::genus0::BinaryForm(degree, c);
}

}  // namespace testgen
