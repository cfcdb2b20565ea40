#pragma once

// Gibbsian dyadics in Cartesian components.
//
// Entry (i, j) of a Tensor3 is the coefficient of e_i (x) e_j: the row index
// belongs to the antecedent, the column index to the consequent. A dyadic only
// acquires a meaning when it acts on a vector, so there is no bare
// tensor-vector multiply here: a vector is applied either from the left
// (postfactor, c . T) or from the right (prefactor, T . c).

#include "dyadkit/vec3.hpp"

#include <array>
#include <string>

namespace dyadkit {

class Tensor3 {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  constexpr Tensor3() = default;
  explicit constexpr Tensor3(const Rows& rows) : m_(rows) {}

  static Tensor3 identity();
  static Tensor3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);

  // Zero-based component access.
  constexpr double operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  constexpr double& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }

  Vec3 row(std::size_t i) const { return {m_[i][0], m_[i][1], m_[i][2]}; }
  Vec3 column(std::size_t j) const { return {m_[0][j], m_[1][j], m_[2][j]}; }
  const Rows& rows() const { return m_; }

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  Tensor3 operator-() const;
  Tensor3 operator*(double s) const;
  Tensor3& operator+=(const Tensor3& o);

  bool operator==(const Tensor3&) const = default;

  double trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

 private:
  Rows m_{};
};

inline Tensor3 operator*(double s, const Tensor3& t) { return t * s; }

// a (x) b, entry (i, j) = a_i b_j.
Tensor3 dyad(const Vec3& a, const Vec3& b);

// c . T, component j = sum_i c_i T_ij.
Vec3 postfactor(const Vec3& c, const Tensor3& t);
// T . c, component i = sum_j T_ij c_j.
Vec3 prefactor(const Tensor3& t, const Vec3& c);

Tensor3 transpose(const Tensor3& t);
Tensor3 sym(const Tensor3& t);
Tensor3 antisym(const Tensor3& t);

// e_i (x) e_j for one-based i, j in {1, 2, 3}; throws std::out_of_range otherwise.
Tensor3 nonion_basis(int i, int j);

double max_abs(const Tensor3& t);
double max_abs_diff(const Tensor3& a, const Tensor3& b);

// Three lines of three right-aligned values with `precision` significant digits.
std::string to_string(const Tensor3& t, int precision = 6);

} // namespace dyadkit
