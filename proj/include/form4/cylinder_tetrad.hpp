#pragma once

#include "form4/frames.hpp"

// Orthonormal coframe of the lab cylindrical chart (t, r, phi, z):
//   theta^0 = dt, theta^1 = dr, theta^2 = r dphi, theta^3 = dz,
// in which the metric components are the Minkowski matrix.  Conversions
// between tetrad and coordinate components live here and nowhere else: a
// slot-2 index contributes one factor of r per occurrence.

namespace form4 {

inline KVector tetrad_to_cyl_coords(const KVector& tetrad, double r) {
  KVector out = tetrad;
  for (int k = 0; k < out.count(); ++k)
    for (int j = 0; j < out.grade; ++j)
      if (kCanon[out.grade][k][j] == 2) out[k] *= r;
  return out;
}

inline KVector cyl_coords_to_tetrad(const KVector& coords, double r) {
  KVector out = coords;
  for (int k = 0; k < out.count(); ++k)
    for (int j = 0; j < out.grade; ++j)
      if (kCanon[out.grade][k][j] == 2) out[k] /= r;
  return out;
}

// Frame 1-form of a point co-rotating at angular velocity omega, radius r,
// in tetrad components: gamma (theta^0 + omega r theta^2).
inline FrameVelocity corotating_frame_tetrad(double omega, double r) {
  const double speed = omega * r;
  if (!(std::fabs(speed) < 1.0)) throw std::domain_error("frame outside physical support");
  const double gamma = 1.0 / std::sqrt(1.0 - speed * speed);
  KVector v(1);
  v[0] = gamma;
  v[2] = gamma * speed;
  FrameVelocity f;
  f.v = v;
  f.vector_components = std::array<double, 4>{gamma, 0.0, gamma * speed, 0.0};
  return f;
}

}  // namespace form4
