#include "doctest.h"

#include "dyadkit/compare.hpp"
#include "dyadkit/dyadics.hpp"
#include "dyadkit/sampling.hpp"

#include <stdexcept>

using namespace dyadkit;

namespace {
const Vec3 e1 = Vec3::unit(0), e2 = Vec3::unit(1), e3 = Vec3::unit(2);
}

TEST_CASE("dyad layout: row = antecedent, column = consequent") {
  CHECK(dyad(e1, e2) == Tensor3(Tensor3::Rows{{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}}));
  CHECK(dyad({1, 2, 3}, e1) == Tensor3(Tensor3::Rows{{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}}));
  const Tensor3 t = dyad({1, 2, 3}, {4, 5, 6});
  // the (2,3) entry is a2 b3
  CHECK(t(1, 2) == 2.0 * 6.0);
}

TEST_CASE("postfactor and prefactor") {
  CHECK(postfactor(e1, dyad(e1, e2)) == e2);
  CHECK(prefactor(dyad(e1, e2), e1) == Vec3{});
  // the operator side matters for an asymmetric dyadic
  CHECK(!(postfactor(e1, dyad(e1, e2)) == prefactor(dyad(e1, e2), e1)));

  Sampler s(17);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 c = s.vec();
    const Tensor3 t = s.tensor();
    REQUIRE(rel_error(postfactor(c, t), prefactor(transpose(t), c)) <= 1e-14);
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(Tensor3::identity()) == Tensor3::identity());
  Sampler s(19);
  for (int i = 0; i < 100; ++i) {
    const Vec3 a = s.vec(), b = s.vec();
    CHECK(transpose(dyad(a, b)) == dyad(b, a));
    CHECK(dyad(a, b) - transpose(dyad(b, a)) == Tensor3{});
    const Tensor3 t = s.tensor();
    CHECK(transpose(transpose(t)) == t);
  }
}

TEST_CASE("symmetric and antisymmetric parts") {
  const Tensor3 s_in(Tensor3::Rows{{{1, 2, 3}, {2, 4, 5}, {3, 5, 6}}});
  CHECK(sym(s_in) == s_in);
  CHECK(antisym(s_in) == Tensor3{});
  CHECK(antisym(dyad(e1, e2)) == (dyad(e1, e2) - dyad(e2, e1)) * 0.5);

  Sampler s(23);
  for (int i = 0; i < 100; ++i) {
    const Tensor3 t = s.tensor();
    CHECK(sym(t) == transpose(sym(t)));
    CHECK(antisym(t) == -transpose(antisym(t)));
    CHECK(rel_error(sym(t) + antisym(t), t) <= 1e-15);
  }
}

TEST_CASE("nonion basis") {
  CHECK(nonion_basis(1, 1) == dyad(e1, e1));
  CHECK(nonion_basis(1, 2) == Tensor3(Tensor3::Rows{{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}}));
  CHECK(nonion_basis(3, 2) == dyad(e3, e2));
  CHECK_THROWS_AS(nonion_basis(0, 1), std::out_of_range);
  CHECK_THROWS_AS(nonion_basis(1, 4), std::out_of_range);

  Sampler s(29);
  for (int n = 0; n < 100; ++n) {
    const Tensor3 t = s.tensor();
    Tensor3 rebuilt;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) rebuilt += nonion_basis(i, j) * t(i - 1, j - 1);
    CHECK(rebuilt == t);
  }
}

TEST_CASE("matrix text rendering") {
  const std::string text = to_string(Tensor3(Tensor3::Rows{{{1, -0.5, 0}, {-0.0, 2, 1.0 / 3.0}, {0, 0, 1e-7}}}));
  CHECK(text ==
        "            1         -0.5            0\n"
        "            0            2     0.333333\n"
        "            0            0        1e-07\n");
}
