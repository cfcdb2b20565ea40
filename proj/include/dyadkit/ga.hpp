#pragma once

// Geometric algebra of Euclidean R^3.
//
// A multivector holds eight coefficients in the canonical blade order
// {1, e1, e2, e3, e12, e13, e23, e123}. Internally a basis blade is identified
// by the bitmask of its vector indices (bit 0 = e1, bit 1 = e2, bit 2 = e3);
// products reorder the merged index sets into ascending order and pick up one
// sign flip per transposition.

#include "dyadkit/vec3.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace dyadkit {

enum class Blade : std::uint8_t {
  scalar = 0b000,
  e1 = 0b001,
  e2 = 0b010,
  e3 = 0b100,
  e12 = 0b011,
  e13 = 0b101,
  e23 = 0b110,
  e123 = 0b111,
};

// Canonical blade order used for storage, iteration and rendering.
inline constexpr std::array<Blade, 8> kCanonicalBlades = {
    Blade::scalar, Blade::e1, Blade::e2, Blade::e3, Blade::e12, Blade::e13, Blade::e23, Blade::e123};

constexpr int blade_grade(Blade b) {
  const auto m = static_cast<unsigned>(b);
  return static_cast<int>((m & 1u) + ((m >> 1) & 1u) + ((m >> 2) & 1u));
}

// "1", "e1", ..., "e123"
const char* blade_name(Blade b);

class Multivector {
 public:
  using Coefficients = std::array<double, 8>;

  constexpr Multivector() = default;
  // Coefficients in canonical blade order.
  explicit constexpr Multivector(const Coefficients& c) : c_(c) {}

  static Multivector scalar(double s);
  static Multivector vector(const Vec3& v);
  static Multivector blade(Blade b, double coeff = 1.0);
  // Basis vector e_i for i in {1,2,3}.
  static Multivector basis(int i);

  double operator[](Blade b) const { return c_[slot(b)]; }
  double& operator[](Blade b) { return c_[slot(b)]; }
  const Coefficients& coefficients() const { return c_; }

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(double s) const;
  Multivector& operator+=(const Multivector& o);

  bool operator==(const Multivector&) const = default;

  bool is_zero() const;
  // True when every coefficient outside grade k is exactly zero.
  bool is_pure_grade(int k) const;

  // Grade-1 coefficients as a vector.
  Vec3 vector_part() const;

 private:
  static std::size_t slot(Blade b);
  Coefficients c_{};
};

inline Multivector operator*(double s, const Multivector& m) { return m * s; }

// Clifford product: e_i e_i = 1 and e_i e_j = -e_j e_i for i != j.
Multivector geometric_product(const Multivector& m, const Multivector& n);
inline Multivector operator*(const Multivector& m, const Multivector& n) { return geometric_product(m, n); }

// <m>_k. Throws std::domain_error unless 0 <= k <= 3.
Multivector grade(const Multivector& m, int k);

// Grade-selected products, extended bilinearly over the grade decomposition
// of both operands: for a j-blade A and a k-blade B,
//   A . B = <AB>_|j-k|,   A ^ B = <AB>_(j+k).
Multivector dot(const Multivector& a, const Multivector& b);
Multivector wedge(const Multivector& a, const Multivector& b);

// Axial vector w of a pure bivector b = w1 e23 + w2 e31 + w3 e12.
// Throws std::domain_error when b has any non-bivector component.
Vec3 vector_dual(const Multivector& b);

// "a0 + a1 e1 + ... + a123 e123" in canonical order, zero terms omitted,
// coefficients with `precision` significant digits. The zero multivector is "0".
std::string to_string(const Multivector& m, int precision = 6);

} // namespace dyadkit
