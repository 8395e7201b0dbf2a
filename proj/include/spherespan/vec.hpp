#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace spherespan {

// Small 2D/3D vector; dim is carried at runtime since most of the library
// handles both ambient dimensions through the same code paths.
struct Vec {
  std::array<double, 3> c{0.0, 0.0, 0.0};
  int dim = 2;

  static Vec zero(int dim) {
    Vec v;
    v.dim = dim;
    return v;
  }
  static Vec of(double x, double y) {
    Vec v;
    v.c = {x, y, 0.0};
    v.dim = 2;
    return v;
  }
  static Vec of(double x, double y, double z) {
    Vec v;
    v.c = {x, y, z};
    v.dim = 3;
    return v;
  }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }
};

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] += b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] -= b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] = -r[i];
  return r;
}

inline Vec operator*(double s, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] *= s;
  return r;
}

inline Vec operator*(const Vec& a, double s) { return s * a; }

inline Vec operator/(const Vec& a, double s) { return (1.0 / s) * a; }

inline bool operator==(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

// 2D scalar cross product; positive iff (0, a, b) is counter-clockwise.
inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec cross3(const Vec& a, const Vec& b) {
  return Vec::of(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                 a[0] * b[1] - a[1] * b[0]);
}

// Counter-clockwise quarter turn, 2D only.
inline Vec rot90(const Vec& a) { return Vec::of(-a[1], a[0]); }

inline Vec rotate2(const Vec& a, double angle) {
  const double co = std::cos(angle), si = std::sin(angle);
  return Vec::of(co * a[0] - si * a[1], si * a[0] + co * a[1]);
}

inline bool all_finite(const Vec& a) {
  for (int i = 0; i < a.dim; ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

// Euclidean distance from x to the segment [a, b].
inline double segment_distance(const Vec& x, const Vec& a, const Vec& b) {
  const Vec d = b - a;
  const double dd = dot(d, d);
  double t = dd > 0.0 ? dot(x - a, d) / dd : 0.0;
  t = std::fmin(1.0, std::fmax(0.0, t));
  return norm(x - (a + t * d));
}

}  // namespace spherespan
