#include "dyadkit/dyadics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dyadkit {

Tensor3 Tensor3::identity() { return Tensor3(Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

Tensor3 Tensor3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return Tensor3(Rows{{{r0.x, r0.y, r0.z}, {r1.x, r1.y, r1.z}, {r2.x, r2.y, r2.z}}});
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  Tensor3 r = *this;
  r += o;
  return r;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] += o.m_[i][j];
  return *this;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m_[i][j] -= o.m_[i][j];
  return r;
}

Tensor3 Tensor3::operator-() const { return *this * -1.0; }

Tensor3 Tensor3::operator*(double s) const {
  Tensor3 r = *this;
  for (auto& row : r.m_)
    for (double& v : row) v *= s;
  return r;
}

Tensor3 dyad(const Vec3& a, const Vec3& b) {
  Tensor3 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = a[i] * b[j];
  return t;
}

Vec3 postfactor(const Vec3& c, const Tensor3& t) {
  Vec3 out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = c[0] * t(0, j) + c[1] * t(1, j) + c[2] * t(2, j);
  return out;
}

Vec3 prefactor(const Tensor3& t, const Vec3& c) {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = t(i, 0) * c[0] + t(i, 1) * c[1] + t(i, 2) * c[2];
  return out;
}

Tensor3 transpose(const Tensor3& t) {
  Tensor3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(j, i) = t(i, j);
  return r;
}

Tensor3 sym(const Tensor3& t) { return (t + transpose(t)) * 0.5; }

Tensor3 antisym(const Tensor3& t) { return (t - transpose(t)) * 0.5; }

Tensor3 nonion_basis(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw std::out_of_range("nonion basis indices must lie in 1..3");
  }
  Tensor3 t;
  t(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1.0;
  return t;
}

double max_abs(const Tensor3& t) {
  double m = 0.0;
  for (const auto& row : t.rows())
    for (double v : row) m = std::fmax(m, std::fabs(v));
  return m;
}

double max_abs_diff(const Tensor3& a, const Tensor3& b) { return max_abs(a - b); }

std::string to_string(const Tensor3& t, int precision) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // -0 prints as 0
      const double v = t(i, j) == 0.0 ? 0.0 : t(i, j);
      std::snprintf(buf, sizeof buf, "%*.*g", precision + 7, precision, v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

} // namespace dyadkit
