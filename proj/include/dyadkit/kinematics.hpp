#pragma once

// Velocity-gradient kinematics at a point.
//
// With G = grad_gibbs(v) (row i = dv/dx_i) the differential velocity is
// dv = dr . G. The Stokes-Gibbs split is G = d + omega with
//
//   d     = (G + G^T) / 2   rate of strain, symmetric
//   omega = (G - G^T) / 2   rate of rotation, antisymmetric, postfactor form
//
// omega acts on the left: dr . omega. Used as a prefactor the rotation tensor
// is transpose(omega). In the geometric algebra omega is the bivector
// (grad ^ v) / 2 and dr . omega(matrix) = dr . omega(bivector).

#include "dyadkit/dyadics.hpp"
#include "dyadkit/fields.hpp"
#include "dyadkit/ga.hpp"

namespace dyadkit {

struct Decomposition {
  Tensor3 d;
  Tensor3 omega;
};

Decomposition decompose(const Tensor3& grad);
Decomposition decompose(const VectorField& f, const Vec3& x);

// dr . G
Vec3 dv_postfactor(const VectorField& f, const Vec3& x, const Vec3& dr);
// G^T . dr
Vec3 dv_prefactor(const VectorField& f, const Vec3& x, const Vec3& dr);

// (grad ^ v) / 2 built as sum_i e_i ^ (dv/dx_i) / 2.
Multivector omega_bivector(const Tensor3& grad);
Multivector omega_bivector(const VectorField& f, const Vec3& x);

// curl v = vector_dual(grad ^ v)
Vec3 vorticity(const Tensor3& grad);

struct StrainSplit {
  Vec3 compressive;    // dx (div v)
  Vec3 incompressive;  // div (dx ^ v)
};

// Both parts sum to dr . G.
StrainSplit strain_split(const VectorField& f, const Vec3& x, const Vec3& dx);

// Bidirectional gradient, with M grad N = d_i(M e_i N) and dx held constant:
//   forward = < grad dx v >_1 = sum_i < e_i dx (dv/dx_i) >_1
//   reverse = < dx v grad >_1 = sum_i < dx (dv/dx_i) e_i >_1
Vec3 bidi_forward(const VectorField& f, const Vec3& x, const Vec3& dx);
Vec3 bidi_reverse(const VectorField& f, const Vec3& x, const Vec3& dx);

struct KinematicsReport {
  Vec3 point;
  Tensor3 grad_gibbs;
  Tensor3 grad_alt;
  Tensor3 d;
  Tensor3 omega;
  Multivector omega_bivector;
  Vec3 vorticity;
  double divergence = 0.0;
};

KinematicsReport report(const VectorField& f, const Vec3& x);

} // namespace dyadkit
