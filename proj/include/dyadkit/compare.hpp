#pragma once

// Tolerance helpers shared by the identity suites.
//
// "Relative" comparisons scale by the larger magnitude of the two operands,
// floored at 1, so values that cancel to (near) zero are compared absolutely.

#include "dyadkit/dyadics.hpp"
#include "dyadkit/ga.hpp"

#include <algorithm>
#include <cmath>
#include <span>

namespace dyadkit {

inline double max_abs(const Multivector& m) {
  double r = 0.0;
  for (double c : m.coefficients()) r = std::max(r, std::fabs(c));
  return r;
}

inline double rel_error(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}
inline double rel_error(const Vec3& a, const Vec3& b) {
  return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}
inline double rel_error(const Tensor3& a, const Tensor3& b) {
  return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}
inline double rel_error(const Multivector& a, const Multivector& b) {
  return max_abs(a - b) / std::max({1.0, max_abs(a), max_abs(b)});
}

template <class T>
bool close(const T& a, const T& b, double rtol) {
  return rel_error(a, b) <= rtol;
}

// Least-squares slope of log(err) against log(h): the observed order of
// accuracy of an O(h^p) error sequence.
inline double fitted_order(std::span<const double> h, std::span<const double> err) {
  const std::size_t n = std::min(h.size(), err.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

} // namespace dyadkit
