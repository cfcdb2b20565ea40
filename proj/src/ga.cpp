#include "dyadkit/ga.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dyadkit {

namespace {

// bitmask -> canonical slot
constexpr std::array<std::size_t, 8> kSlotOfMask = {0, 1, 2, 4, 3, 5, 6, 7};

// Sign of e_A e_B after sorting the concatenated index list: every index of A
// must hop over the lower indices of B.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b);
  }
  return (swaps & 1) ? -1 : 1;
}

template <class Keep>
Multivector graded_product(const Multivector& a, const Multivector& b, Keep keep) {
  Multivector out;
  for (Blade ba : kCanonicalBlades) {
    const double ca = a[ba];
    if (ca == 0.0) continue;
    for (Blade bb : kCanonicalBlades) {
      const double cb = b[bb];
      if (cb == 0.0) continue;
      const unsigned ma = static_cast<unsigned>(ba);
      const unsigned mb = static_cast<unsigned>(bb);
      const auto product = static_cast<Blade>(ma ^ mb);
      if (!keep(blade_grade(ba), blade_grade(bb), blade_grade(product))) continue;
      out[product] += reorder_sign(ma, mb) * ca * cb;
    }
  }
  return out;
}

} // namespace

const char* blade_name(Blade b) {
  switch (b) {
    case Blade::scalar: return "1";
    case Blade::e1: return "e1";
    case Blade::e2: return "e2";
    case Blade::e3: return "e3";
    case Blade::e12: return "e12";
    case Blade::e13: return "e13";
    case Blade::e23: return "e23";
    case Blade::e123: return "e123";
  }
  return "?";
}

std::size_t Multivector::slot(Blade b) { return kSlotOfMask[static_cast<unsigned>(b) & 7u]; }

Multivector Multivector::scalar(double s) {
  Multivector m;
  m[Blade::scalar] = s;
  return m;
}

Multivector Multivector::vector(const Vec3& v) {
  Multivector m;
  m[Blade::e1] = v.x;
  m[Blade::e2] = v.y;
  m[Blade::e3] = v.z;
  return m;
}

Multivector Multivector::blade(Blade b, double coeff) {
  Multivector m;
  m[b] = coeff;
  return m;
}

Multivector Multivector::basis(int i) {
  if (i < 1 || i > 3) throw std::domain_error("basis vector index must be 1, 2 or 3");
  return blade(static_cast<Blade>(1u << (i - 1)));
}

Multivector Multivector::operator+(const Multivector& o) const {
  Multivector r = *this;
  r += o;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector Multivector::operator-(const Multivector& o) const {
  Multivector r = *this;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Multivector Multivector::operator-() const { return *this * -1.0; }

Multivector Multivector::operator*(double s) const {
  Multivector r = *this;
  for (double& c : r.c_) c *= s;
  return r;
}

bool Multivector::is_zero() const {
  for (double c : c_) {
    if (c != 0.0) return false;
  }
  return true;
}

bool Multivector::is_pure_grade(int k) const {
  for (Blade b : kCanonicalBlades) {
    if (blade_grade(b) != k && (*this)[b] != 0.0) return false;
  }
  return true;
}

Vec3 Multivector::vector_part() const { return {(*this)[Blade::e1], (*this)[Blade::e2], (*this)[Blade::e3]}; }

Multivector geometric_product(const Multivector& m, const Multivector& n) {
  return graded_product(m, n, [](int, int, int) { return true; });
}

Multivector grade(const Multivector& m, int k) {
  if (k < 0 || k > 3) throw std::domain_error("grade must be in 0..3, got " + std::to_string(k));
  Multivector out;
  for (Blade b : kCanonicalBlades) {
    if (blade_grade(b) == k) out[b] = m[b];
  }
  return out;
}

// For basis blades the product e_A e_B is itself a single blade of grade
// |A xor B|, so selecting per blade pair is the same as taking the grade part
// of the full product of the two homogeneous pieces.
Multivector dot(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int ga, int gb, int g) { return g == std::abs(ga - gb); });
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int ga, int gb, int g) { return g == ga + gb; });
}

Vec3 vector_dual(const Multivector& b) {
  if (!b.is_pure_grade(2)) throw std::domain_error("vector_dual expects a pure bivector");
  // e31 = -e13
  return {b[Blade::e23], -b[Blade::e13], b[Blade::e12]};
}

std::string to_string(const Multivector& m, int precision) {
  std::string out;
  char buf[64];
  for (Blade b : kCanonicalBlades) {
    const double c = m[b];
    if (c == 0.0) continue;
    const double mag = out.empty() ? c : std::fabs(c);
    std::snprintf(buf, sizeof buf, "%.*g", precision, mag);
    if (!out.empty()) out += c < 0.0 ? " - " : " + ";
    out += buf;
    if (b != Blade::scalar) {
      out += ' ';
      out += blade_name(b);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace dyadkit
