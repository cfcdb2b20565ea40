#include "dyadkit/kinematics.hpp"

namespace dyadkit {

namespace {

Multivector e(std::size_t axis) { return Multivector::basis(static_cast<int>(axis) + 1); }

} // namespace

Decomposition decompose(const Tensor3& grad) { return {sym(grad), antisym(grad)}; }

Decomposition decompose(const VectorField& f, const Vec3& x) { return decompose(grad_gibbs(f, x)); }

Vec3 dv_postfactor(const VectorField& f, const Vec3& x, const Vec3& dr) {
  return postfactor(dr, grad_gibbs(f, x));
}

Vec3 dv_prefactor(const VectorField& f, const Vec3& x, const Vec3& dr) {
  return prefactor(transpose(grad_gibbs(f, x)), dr);
}

Multivector omega_bivector(const Tensor3& grad) {
  Multivector curl;
  for (std::size_t i = 0; i < 3; ++i) curl += wedge(e(i), Multivector::vector(grad.row(i)));
  return curl * 0.5;
}

Multivector omega_bivector(const VectorField& f, const Vec3& x) { return omega_bivector(grad_gibbs(f, x)); }

Vec3 vorticity(const Tensor3& grad) {
  Multivector curl;
  for (std::size_t i = 0; i < 3; ++i) curl += wedge(e(i), Multivector::vector(grad.row(i)));
  return vector_dual(curl);
}

StrainSplit strain_split(const VectorField& f, const Vec3& x, const Vec3& dx) {
  const Tensor3 g = grad_gibbs(f, x);
  const Multivector dxm = Multivector::vector(dx);
  Multivector div_wedge;
  for (std::size_t i = 0; i < 3; ++i) {
    div_wedge += dot(e(i), wedge(dxm, Multivector::vector(g.row(i))));
  }
  return {dx * g.trace(), div_wedge.vector_part()};
}

Vec3 bidi_forward(const VectorField& f, const Vec3& x, const Vec3& dx) {
  const Tensor3 g = grad_gibbs(f, x);
  const Multivector dxm = Multivector::vector(dx);
  Multivector sum;
  for (std::size_t i = 0; i < 3; ++i) sum += e(i) * dxm * Multivector::vector(g.row(i));
  return sum.vector_part();
}

Vec3 bidi_reverse(const VectorField& f, const Vec3& x, const Vec3& dx) {
  const Tensor3 g = grad_gibbs(f, x);
  const Multivector dxm = Multivector::vector(dx);
  Multivector sum;
  for (std::size_t i = 0; i < 3; ++i) sum += dxm * Multivector::vector(g.row(i)) * e(i);
  return sum.vector_part();
}

KinematicsReport report(const VectorField& f, const Vec3& x) {
  KinematicsReport r;
  r.point = x;
  r.grad_gibbs = grad_gibbs(f, x);
  r.grad_alt = transpose(r.grad_gibbs);
  const Decomposition parts = decompose(r.grad_gibbs);
  r.d = parts.d;
  r.omega = parts.omega;
  r.omega_bivector = omega_bivector(r.grad_gibbs);
  r.vorticity = vorticity(r.grad_gibbs);
  r.divergence = r.grad_gibbs.trace();
  return r;
}

} // namespace dyadkit
