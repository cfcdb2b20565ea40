#pragma once

// Seeded random inputs for the identity suites. Doubles are built from raw
// mt19937_64 output, so a seed reproduces the same cases on every platform.

#include "dyadkit/dyadics.hpp"
#include "dyadkit/fields.hpp"
#include "dyadkit/ga.hpp"

#include <cstdint>
#include <random>

namespace dyadkit {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi).
  double uniform(double lo = -1.0, double hi = 1.0);
  Vec3 vec();
  Vec3 unit_vec();
  Tensor3 tensor();
  Multivector multivector();
  // Random k-blade: the wedge of k random vectors (k in 0..3).
  Multivector blade(int k);

  // Dense cubic field: every monomial of total degree <= 3 in every
  // component, coefficients in [-1, 1).
  PolyField cubic_field();
  // Divergence-free cubic field v = curl A for a random quartic A.
  PolyField solenoidal_cubic_field();

 private:
  std::mt19937_64 rng_;
};

} // namespace dyadkit
