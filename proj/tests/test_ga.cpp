#include "doctest.h"

#include "blade_oracle.hpp"
#include "dyadkit/compare.hpp"
#include "dyadkit/ga.hpp"
#include "dyadkit/sampling.hpp"

#include <stdexcept>

using namespace dyadkit;

namespace {

const Multivector e1 = Multivector::basis(1);
const Multivector e2 = Multivector::basis(2);
const Multivector e3 = Multivector::basis(3);

Multivector mv(std::initializer_list<std::pair<Blade, double>> terms) {
  Multivector m;
  for (auto [b, c] : terms) m[b] = c;
  return m;
}

} // namespace

TEST_CASE("unit square and anticommutation of basis vectors") {
  CHECK(e1 * e1 == Multivector::scalar(1.0));
  CHECK(e2 * e2 == Multivector::scalar(1.0));
  CHECK(e3 * e3 == Multivector::scalar(1.0));
  CHECK(e1 * e2 == Multivector::blade(Blade::e12));
  CHECK(e2 * e1 == -Multivector::blade(Blade::e12));
  CHECK(e3 * e1 == -Multivector::blade(Blade::e13));
  CHECK(e1 * e2 * e3 == Multivector::blade(Blade::e123));
  // pseudoscalar squares to -1 in R^3
  CHECK(Multivector::blade(Blade::e123) * Multivector::blade(Blade::e123) == Multivector::scalar(-1.0));
}

TEST_CASE("worked product e1(e2+e3)e1e2") {
  // e1e2e1e2 = -1 and e1e3e1e2 = -e3e1e1e2 = -e3e2 = e2e3.
  // This product is often quoted as -1 - e2e3; that bivector sign is wrong,
  // the oracle agrees with the expansion above.
  const Multivector got = e1 * (e2 + e3) * e1 * e2;
  const Multivector expected = mv({{Blade::scalar, -1.0}, {Blade::e23, 1.0}});
  CHECK(got == expected);

  const oracle::Terms o = oracle::product(
      oracle::product(oracle::product(oracle::basis(1), oracle::add(oracle::basis(2), oracle::basis(3))),
                      oracle::basis(1)),
      oracle::basis(2));
  CHECK(oracle::to_multivector(o) == expected);
}

TEST_CASE("geometric product agrees with the brute-force oracle") {
  Sampler s(7);
  for (int i = 0; i < 500; ++i) {
    const Multivector a = s.multivector();
    const Multivector b = s.multivector();
    const Multivector expected = oracle::to_multivector(oracle::product(oracle::from(a), oracle::from(b)));
    REQUIRE(rel_error(a * b, expected) <= 1e-15);
  }
}

TEST_CASE("grade selection") {
  // M = 1 + e3 + (e1 + e3)e2 + e1e2e3
  const Multivector m = Multivector::scalar(1.0) + e3 + (e1 + e3) * e2 + e1 * e2 * e3;
  CHECK(grade(m, 0) == Multivector::scalar(1.0));
  CHECK(grade(m, 1) == e3);
  CHECK(grade(m, 2) == mv({{Blade::e12, 1.0}, {Blade::e23, -1.0}}));
  CHECK(grade(m, 3) == Multivector::blade(Blade::e123));

  for (int k = 0; k <= 3; ++k) CHECK(grade(Multivector{}, k).is_zero());
  CHECK_THROWS_AS(grade(m, -1), std::domain_error);
  CHECK_THROWS_AS(grade(m, 4), std::domain_error);
}

TEST_CASE("grade selection matches the oracle word lengths") {
  Sampler s(11);
  for (int i = 0; i < 100; ++i) {
    const Multivector m = s.multivector();
    for (int k = 0; k <= 3; ++k) {
      CHECK(grade(m, k) == oracle::to_multivector(oracle::grade_part(oracle::from(m), k)));
    }
  }
}

TEST_CASE("dot and wedge on vectors and blades") {
  CHECK(dot(e1, e1) == Multivector::scalar(1.0));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(dot(Multivector::blade(Blade::e12), e2) == e1);
  CHECK(dot(e2, Multivector::blade(Blade::e12)) == -e1);
  CHECK(wedge(e1, e2) == Multivector::blade(Blade::e12));
  CHECK(wedge(Multivector::blade(Blade::e12), e3) == Multivector::blade(Blade::e123));
  // a scalar operand scales
  const Multivector m = mv({{Blade::e1, 2.0}, {Blade::e23, -1.0}});
  CHECK(dot(Multivector::scalar(3.0), m) == m * 3.0);
  CHECK(wedge(Multivector::scalar(3.0), m) == m * 3.0);
}

TEST_CASE("dot and wedge are grade selections of the oracle product per blade pair") {
  Sampler s(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int j = trial % 4;
    const int k = (trial / 4) % 4;
    const Multivector a = grade(s.multivector(), j);
    const Multivector b = grade(s.multivector(), k);
    const oracle::Terms ab = oracle::product(oracle::from(a), oracle::from(b));
    CHECK(rel_error(dot(a, b), oracle::to_multivector(oracle::grade_part(ab, std::abs(j - k)))) <= 1e-15);
    CHECK(rel_error(wedge(a, b), oracle::to_multivector(oracle::grade_part(ab, j + k))) <= 1e-15);
  }
}

TEST_CASE("wedge of random vectors is antisymmetric") {
  Sampler s(3);
  for (int i = 0; i < 100; ++i) {
    const Multivector a = Multivector::vector(s.vec()), b = Multivector::vector(s.vec());
    CHECK(rel_error(wedge(a, b), -wedge(b, a)) <= 1e-15);
  }
}

TEST_CASE("vector_dual") {
  CHECK(vector_dual(Multivector::blade(Blade::e12)) == Vec3{0, 0, 1});
  CHECK(vector_dual(Multivector::blade(Blade::e23)) == Vec3{1, 0, 0});
  CHECK(vector_dual(Multivector::blade(Blade::e13)) == Vec3{0, -1, 0});
  CHECK_THROWS_AS(vector_dual(e1), std::domain_error);
  CHECK_THROWS_AS(vector_dual(Multivector::scalar(1.0) + Multivector::blade(Blade::e12)), std::domain_error);

  // a ^ b is the dual of a x b
  Sampler s(5);
  for (int i = 0; i < 100; ++i) {
    const Vec3 a = s.vec(), b = s.vec();
    CHECK(rel_error(vector_dual(wedge(Multivector::vector(a), Multivector::vector(b))), cross(a, b)) <= 1e-15);
  }
}

TEST_CASE("text rendering") {
  CHECK(to_string(Multivector{}) == "0");
  CHECK(to_string(mv({{Blade::scalar, -1.0}, {Blade::e23, 1.0}})) == "-1 + 1 e23");
  CHECK(to_string(mv({{Blade::e1, 0.5}, {Blade::e12, -2.0}, {Blade::e123, 3.0}})) == "0.5 e1 - 2 e12 + 3 e123");
  CHECK(to_string(mv({{Blade::e3, 1.0 / 3.0}})) == "0.333333 e3");
}

TEST_CASE("basis index validation") {
  CHECK_THROWS_AS(Multivector::basis(0), std::domain_error);
  CHECK_THROWS_AS(Multivector::basis(4), std::domain_error);
}
