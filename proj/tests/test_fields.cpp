#include "doctest.h"

#include "dyadkit/compare.hpp"
#include "dyadkit/field_io.hpp"
#include "dyadkit/fields.hpp"
#include "dyadkit/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

using namespace dyadkit;

namespace {

const Polynomial X = Polynomial::coordinate(0);
const Polynomial Y = Polynomial::coordinate(1);
const Polynomial Z = Polynomial::coordinate(2);

Polynomial mono(double c, unsigned a, unsigned b, unsigned d) { return Polynomial{Monomial{c, {a, b, d}}}; }

std::string pointer_of(const std::string& text) {
  try {
    parse_field_spec(text);
  } catch (const FieldSpecError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

} // namespace

TEST_CASE("polynomial canonical form and evaluation") {
  CHECK((X - X).is_zero());
  CHECK(Polynomial{Monomial{1.0, {1, 0, 0}}, Monomial{-1.0, {1, 0, 0}}}.is_zero());
  CHECK(mono(2, 1, 0, 0) == X + X);
  CHECK(mono(3, 2, 1, 0)(Vec3{2, 5, 7}) == 3.0 * 4.0 * 5.0);
  CHECK(mono(1, 2, 1, 3).degree() == 6);
  CHECK(Polynomial{}.degree() == 0);
}

TEST_CASE("monomial derivatives") {
  CHECK(mono(3, 2, 1, 0).derivative(0) == mono(6, 1, 1, 0));
  CHECK(mono(3, 2, 1, 0).derivative(1) == mono(3, 2, 0, 0));
  CHECK(mono(3, 2, 1, 0).derivative(2).is_zero());
  CHECK(Polynomial::constant(4).derivative(0).is_zero());
  CHECK(gradient(mono(1, 1, 1, 1), Vec3{2, 3, 5}) == Vec3{15, 10, 6});
}

TEST_CASE("field evaluation") {
  const PolyField c(Polynomial::constant(1), Polynomial::constant(-2), Polynomial::constant(3));
  CHECK(eval(c, Vec3{9, 8, 7}) == Vec3{1, -2, 3});
  const PolyField f(mono(1, 2, 0, 0), mono(1, 1, 1, 0), Z);
  CHECK(eval(f, Vec3{1, 2, 3}) == Vec3{1, 2, 3});
  CHECK(eval(rotation_field({0, 0, 1}), Vec3{1, 0, 0}) == Vec3{0, 1, 0});
}

TEST_CASE("Gibbs layout: row i holds the derivative along x_i") {
  // v = (x y, y z^2, x^3): d/dx -> (y, 0, 3x^2), d/dy -> (x, z^2, 0), d/dz -> (0, 2yz, 0)
  const PolyField f(mono(1, 1, 1, 0), mono(1, 0, 1, 2), mono(1, 3, 0, 0));
  const Vec3 x{2, 3, 5};
  const Tensor3 g = grad_gibbs(VectorField{f}, x);
  CHECK(g == Tensor3(Tensor3::Rows{{{3, 0, 12}, {2, 25, 0}, {0, 30, 0}}}));
  // columns are the component gradients
  for (std::size_t j = 0; j < 3; ++j) CHECK(g.column(j) == gradient(f.component(j), x));
  CHECK(grad_alt(VectorField{f}, x) == transpose(g));
}

TEST_CASE("constant and linear fields") {
  const VectorField c = PolyField(Polynomial::constant(1), Polynomial::constant(2), Polynomial::constant(3));
  CHECK(grad_gibbs(c, Vec3{1, 1, 1}) == Tensor3{});
  CHECK(grad_alt(c, Vec3{1, 1, 1}) == Tensor3{});

  Sampler s(31);
  for (int i = 0; i < 50; ++i) {
    const Tensor3 a = s.tensor();
    const VectorField f = linear_field(a);
    const Vec3 x = s.vec();
    CHECK(rel_error(eval(f, x), prefactor(a, x)) <= 1e-15);
    CHECK(rel_error(grad_gibbs(f, x), transpose(a)) <= 1e-15);
    CHECK(rel_error(grad_alt(f, x), a) <= 1e-15);
  }
}

TEST_CASE("divergence") {
  const VectorField r = PolyField(X, Y, Z);
  CHECK(divergence(r, Vec3{4, 5, 6}) == 3.0);
  CHECK(divergence(VectorField{rotation_field({0.3, -1, 2})}, Vec3{4, 5, 6}) == 0.0);
  const VectorField f = PolyField(mono(1, 2, 0, 0), mono(1, 1, 1, 0), Z);
  CHECK(divergence(f, Vec3{1, 1, 1}) == 4.0);
}

TEST_CASE("finite differences") {
  SUBCASE("exact on linear fields up to rounding") {
    Sampler s(37);
    const Tensor3 a = s.tensor();
    const PolyField f = linear_field(a);
    for (double h : {1e-1, 1.0, 3.0}) CHECK(rel_error(fd_grad(as_black_box(f, h), Vec3{0.2, -0.7, 1.1}), transpose(a)) <= 1e-13);
  }
  SUBCASE("x^2 at (1,0,0)") {
    const BlackBoxField b = as_black_box(PolyField(mono(1, 2, 0, 0), {}, {}), 1e-4);
    CHECK(std::fabs(fd_grad(b, Vec3{1, 0, 0})(0, 0) - 2.0) <= 1e-8);
  }
  SUBCASE("second order against the exact gradient") {
    const PolyField f(mono(1, 3, 0, 0) + mono(2, 1, 2, 0), mono(-1, 0, 1, 3), mono(0.5, 1, 1, 1));
    const Vec3 x{0.3, -0.4, 0.8};
    const Tensor3 exact = grad_gibbs(f, x);
    const double hs[] = {1e-2, 1e-3, 1e-4};
    double errs[3];
    for (int i = 0; i < 3; ++i) errs[i] = max_abs_diff(fd_grad(as_black_box(f, hs[i]), x), exact);
    CHECK(fitted_order(hs, errs) >= 1.9);
  }
  SUBCASE("black-box variant dispatch uses the step") {
    const PolyField f(mono(1, 2, 0, 0), {}, {});
    const VectorField b = as_black_box(f, 0.5);
    CHECK(grad_gibbs(b, Vec3{1, 0, 0})(0, 0) == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(BlackBoxField([](const Vec3& x) { return x; }, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlackBoxField([](const Vec3& x) { return x; }, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(BlackBoxField(BlackBoxField::Evaluator{}, 1e-3), std::invalid_argument);
}

TEST_CASE("field spec round trip") {
  Sampler s(41);
  const PolyField f = s.cubic_field();
  CHECK(parse_field_spec(to_json(f)) == f);
  const PolyField shear = load_field_spec(DYADKIT_DATA_DIR "/fields/shear.json");
  CHECK(shear == PolyField(Y, {}, {}));
  const PolyField rot = load_field_spec(DYADKIT_DATA_DIR "/fields/rotation.json");
  CHECK(rot == rotation_field({0, 0, 1}));
  CHECK_THROWS_AS(load_field_spec("/definitely/not/here.json"), std::runtime_error);
}

TEST_CASE("field spec schema violations carry a JSON pointer") {
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[],[]]})") == "<accepted>");
  CHECK(pointer_of("not json") == "");
  CHECK(pointer_of("[]") == "");
  CHECK(pointer_of(R"({"components":[[],[],[]]})") == "/type");
  CHECK(pointer_of(R"({"type":"trig","components":[[],[],[]]})") == "/type");
  CHECK(pointer_of(R"({"type":"polynomial"})") == "/components");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[]]})") == "/components");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],{},[]]})") == "/components/1");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[],[]],"extra":1})") == "/extra");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[],[]],"a/b":1})") == "/a~1b");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[{"coeff":"1","powers":[0,0,0]}],[],[]]})") ==
        "/components/0/0/coeff");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[{"coeff":1,"powers":[0,0]}],[]]})") ==
        "/components/1/0/powers");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[],[],[{"coeff":1,"powers":[0,1.5,0]}]]})") ==
        "/components/2/0/powers/1");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[{"coeff":1,"powers":[0,0,-1]}],[],[]]})") ==
        "/components/0/0/powers/2");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[{"coeff":1,"powers":[0,0,0],"x":0}],[],[]]})") ==
        "/components/0/0/x");
  CHECK(pointer_of(R"({"type":"polynomial","components":[[{"powers":[0,0,0]}],[],[]]})") ==
        "/components/0/0/coeff");
}
