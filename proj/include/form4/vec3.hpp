#pragma once

#include <cmath>
#include <stdexcept>

#include "form4/kvector.hpp"

namespace form4 {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double max_abs() const {
    return std::fmax(std::fabs(x), std::fmax(std::fabs(y), std::fabs(z)));
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Engineering bridge: the spatial components of a 1-form in an orthonormal
// (co)frame are identified with vector components in the matching
// right-handed triad (e.g. the cylinder coframe slots 1,2,3 map onto
// e_r, e_phi, e_z).  This identification lives only here.
inline Vec3 engineering_vector(const KVector& spatial_form) {
  if (spatial_form.grade != 1) throw std::invalid_argument("expected a 1-form");
  return {spatial_form[1], spatial_form[2], spatial_form[3]};
}

}  // namespace form4
