#pragma once

// Plain 3-D vector value type for positions, displacements and steerings.

#include <cmath>

namespace batmobile {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3& o) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Unit vector; the zero vector maps to zero so callers can treat "no
// direction" as "no displacement".
inline Vec3 unit(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) return {};
  return v / n;
}

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Position sample with its simulation timestamp.
struct TimedPosition {
  double time = 0.0;
  Vec3 pos;
};

}  // namespace batmobile
