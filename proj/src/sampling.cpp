#include "dyadkit/sampling.hpp"

#include <vector>

namespace dyadkit {

namespace {

Polynomial random_polynomial(Sampler& s, unsigned max_degree) {
  std::vector<Monomial> terms;
  for (unsigned a = 0; a <= max_degree; ++a)
    for (unsigned b = 0; a + b <= max_degree; ++b)
      for (unsigned c = 0; a + b + c <= max_degree; ++c) terms.push_back({s.uniform(), {a, b, c}});
  return Polynomial(terms);
}

} // namespace

double Sampler::uniform(double lo, double hi) {
  // 53 random mantissa bits -> [0, 1)
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Vec3 Sampler::vec() {
  const double x = uniform();
  const double y = uniform();
  const double z = uniform();
  return {x, y, z};
}

Vec3 Sampler::unit_vec() {
  for (;;) {
    const Vec3 v = vec();
    const double n = norm(v);
    if (n > 1e-3 && n <= 1.0) return v * (1.0 / n);
  }
}

Tensor3 Sampler::tensor() {
  const Vec3 r0 = vec();
  const Vec3 r1 = vec();
  const Vec3 r2 = vec();
  return Tensor3::from_rows(r0, r1, r2);
}

Multivector Sampler::multivector() {
  Multivector::Coefficients c{};
  for (double& v : c) v = uniform();
  return Multivector(c);
}

Multivector Sampler::blade(int k) {
  Multivector b = Multivector::scalar(uniform());
  for (int i = 0; i < k; ++i) b = wedge(b, Multivector::vector(vec()));
  return b;
}

PolyField Sampler::cubic_field() {
  Polynomial v1 = random_polynomial(*this, 3);
  Polynomial v2 = random_polynomial(*this, 3);
  Polynomial v3 = random_polynomial(*this, 3);
  return PolyField(std::move(v1), std::move(v2), std::move(v3));
}

PolyField Sampler::solenoidal_cubic_field() {
  const Polynomial a1 = random_polynomial(*this, 4);
  const Polynomial a2 = random_polynomial(*this, 4);
  const Polynomial a3 = random_polynomial(*this, 4);
  return PolyField(a3.derivative(1) - a2.derivative(2), a1.derivative(2) - a3.derivative(0),
                   a2.derivative(0) - a1.derivative(1));
}

} // namespace dyadkit
