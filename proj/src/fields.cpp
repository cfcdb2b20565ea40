#include "dyadkit/fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyadkit {

namespace {

double ipow(double base, unsigned e) {
  double r = 1.0;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

} // namespace

Polynomial::Polynomial(std::span<const Monomial> terms) {
  for (const Monomial& m : terms) add_term(m.coeff, m.powers);
}

Polynomial::Polynomial(std::initializer_list<Monomial> terms)
    : Polynomial(std::span<const Monomial>(terms.begin(), terms.size())) {}

Polynomial Polynomial::constant(double c) { return Polynomial{{c, {0, 0, 0}}}; }

Polynomial Polynomial::coordinate(std::size_t axis) {
  Powers p{0, 0, 0};
  p.at(axis) = 1;
  return Polynomial{{1.0, p}};
}

void Polynomial::add_term(double coeff, const Powers& p) {
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::operator()(const Vec3& x) const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) sum += c * ipow(x.x, p[0]) * ipow(x.y, p[1]) * ipow(x.z, p[2]);
  return sum;
}

Polynomial Polynomial::derivative(std::size_t axis) const {
  if (axis > 2) throw std::out_of_range("derivative axis must be 0, 1 or 2");
  Polynomial d;
  for (const auto& [p, c] : terms_) {
    if (p[axis] == 0) continue;
    Powers q = p;
    q[axis] -= 1;
    d.add_term(c * p[axis], q);
  }
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [p, c] : o.terms_) r.add_term(c, p);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(double s) const {
  Polynomial r;
  for (const auto& [p, c] : terms_) r.add_term(c * s, p);
  return r;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p[0] + p[1] + p[2]);
  return d;
}

Vec3 gradient(const Polynomial& p, const Vec3& x) {
  return {p.derivative(0)(x), p.derivative(1)(x), p.derivative(2)(x)};
}

PolyField PolyField::partial(std::size_t axis) const {
  return PolyField(c_[0].derivative(axis), c_[1].derivative(axis), c_[2].derivative(axis));
}

PolyField linear_field(const Tensor3& a) {
  std::array<Polynomial, 3> comps;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) comps[j] = comps[j] + Polynomial::coordinate(k) * a(j, k);
  }
  return PolyField(std::move(comps));
}

PolyField rotation_field(const Vec3& w) {
  return linear_field(Tensor3(Tensor3::Rows{{{0.0, -w.z, w.y}, {w.z, 0.0, -w.x}, {-w.y, w.x, 0.0}}}));
}

Polynomial dot(const Vec3& c, const PolyField& f) {
  return f.component(0) * c.x + f.component(1) * c.y + f.component(2) * c.z;
}

BlackBoxField::BlackBoxField(Evaluator evaluator, double step) : eval_(std::move(evaluator)), step_(step) {
  if (!eval_) throw std::invalid_argument("black-box field needs an evaluator");
  if (!(step_ > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

BlackBoxField as_black_box(const PolyField& f, double step) {
  return BlackBoxField([f](const Vec3& x) { return eval(f, x); }, step);
}

Vec3 eval(const PolyField& f, const Vec3& x) {
  return {f.component(0)(x), f.component(1)(x), f.component(2)(x)};
}

Vec3 eval(const BlackBoxField& f, const Vec3& x) { return f(x); }

Vec3 eval(const VectorField& f, const Vec3& x) {
  return std::visit([&](const auto& field) { return eval(field, x); }, f);
}

Tensor3 fd_grad(const BlackBoxField& f, const Vec3& x) {
  const double h = f.step();
  Tensor3 g;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec3 offset = Vec3::unit(i) * h;
    const Vec3 fwd = f(x + offset);
    const Vec3 bwd = f(x - offset);
    for (std::size_t j = 0; j < 3; ++j) g(i, j) = (fwd[j] - bwd[j]) / (2.0 * h);
  }
  return g;
}

Tensor3 grad_gibbs(const PolyField& f, const Vec3& x) {
  Tensor3 g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g(i, j) = f.component(j).derivative(i)(x);
  return g;
}

Tensor3 grad_gibbs(const BlackBoxField& f, const Vec3& x) { return fd_grad(f, x); }

Tensor3 grad_gibbs(const VectorField& f, const Vec3& x) {
  return std::visit([&](const auto& field) { return grad_gibbs(field, x); }, f);
}

Tensor3 grad_alt(const VectorField& f, const Vec3& x) { return transpose(grad_gibbs(f, x)); }

double divergence(const VectorField& f, const Vec3& x) { return grad_gibbs(f, x).trace(); }

} // namespace dyadkit
