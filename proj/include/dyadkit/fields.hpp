#pragma once

// Vector fields v : R^3 -> R^3 and their gradients.
//
// Polynomial fields differentiate symbolically and give exact gradients;
// black-box fields are differentiated with central differences. Both feed the
// same gradient entry points:
//
//   grad_gibbs(f, x)(i, j) = d v_j / d x_i   (row i holds dv/dx_i)
//   grad_alt(f, x)         = transpose(grad_gibbs(f, x))

#include "dyadkit/dyadics.hpp"
#include "dyadkit/vec3.hpp"

#include <array>
#include <functional>
#include <map>
#include <span>
#include <variant>

namespace dyadkit {

// Exponents of x, y, z.
using Powers = std::array<unsigned, 3>;

struct Monomial {
  double coeff = 0.0;
  Powers powers{};
};

// Multivariate polynomial in canonical form: one coefficient per exponent
// triple, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::span<const Monomial> terms);
  Polynomial(std::initializer_list<Monomial> terms);

  static Polynomial constant(double c);
  // The coordinate function x_axis.
  static Polynomial coordinate(std::size_t axis);

  double operator()(const Vec3& x) const;
  Polynomial derivative(std::size_t axis) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(double s) const;

  bool operator==(const Polynomial&) const = default;

  const std::map<Powers, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

 private:
  void add_term(double coeff, const Powers& p);
  std::map<Powers, double> terms_;
};

Vec3 gradient(const Polynomial& p, const Vec3& x);

class PolyField {
 public:
  PolyField() = default;
  explicit PolyField(std::array<Polynomial, 3> components) : c_(std::move(components)) {}
  PolyField(Polynomial v1, Polynomial v2, Polynomial v3) : c_{std::move(v1), std::move(v2), std::move(v3)} {}

  const Polynomial& component(std::size_t i) const { return c_[i]; }
  const std::array<Polynomial, 3>& components() const { return c_; }

  // d v / d x_axis
  PolyField partial(std::size_t axis) const;

  bool operator==(const PolyField&) const = default;

 private:
  std::array<Polynomial, 3> c_;
};

// v(x) = A . x (A applied as a prefactor), so grad_gibbs = transpose(A).
PolyField linear_field(const Tensor3& a);
// v(x) = w x x, rigid rotation with angular velocity w.
PolyField rotation_field(const Vec3& w);

// The scalar polynomial c . v for a constant vector c.
Polynomial dot(const Vec3& c, const PolyField& f);

inline constexpr double kDefaultFdStep = 1e-5;

// A field known only through evaluation. The evaluator must be reentrant and
// free of side effects while derivatives are being taken.
class BlackBoxField {
 public:
  using Evaluator = std::function<Vec3(const Vec3&)>;

  // Throws std::invalid_argument unless step > 0 and the evaluator is callable.
  explicit BlackBoxField(Evaluator evaluator, double step = kDefaultFdStep);

  Vec3 operator()(const Vec3& x) const { return eval_(x); }
  double step() const { return step_; }

 private:
  Evaluator eval_;
  double step_;
};

// Samples a polynomial field through its evaluator only.
BlackBoxField as_black_box(const PolyField& f, double step = kDefaultFdStep);

using VectorField = std::variant<PolyField, BlackBoxField>;

Vec3 eval(const PolyField& f, const Vec3& x);
Vec3 eval(const BlackBoxField& f, const Vec3& x);
Vec3 eval(const VectorField& f, const Vec3& x);

// Central differences: entry (i, j) = [v_j(x + h e_i) - v_j(x - h e_i)] / 2h.
Tensor3 fd_grad(const BlackBoxField& f, const Vec3& x);

Tensor3 grad_gibbs(const PolyField& f, const Vec3& x);
Tensor3 grad_gibbs(const BlackBoxField& f, const Vec3& x);
Tensor3 grad_gibbs(const VectorField& f, const Vec3& x);

Tensor3 grad_alt(const VectorField& f, const Vec3& x);

double divergence(const VectorField& f, const Vec3& x);

} // namespace dyadkit
