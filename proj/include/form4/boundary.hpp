#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "form4/operators.hpp"
#include "form4/vec3.hpp"

// Jump conditions for the field strength F and the excitation G across a
// moving interface, described by a level set Xi(t,x,y,z) = 0 with normal
// covector n = dXi.  Free surface charge/current layers are not modelled.
//
// Engineering reduction used here (lab frame, n_vec = -grad Xi, boundary
// velocity v, kinematic constraint dXi/dt = n_vec . v):
//   [F] ^ n  = 0   <=>   n_vec.[B] = 0   and   n_vec x [E] - (n_vec.v)[B] = 0
//   [G] |_ n = 0   <=>   n_vec.[D] = 0   and   n_vec x [H] + (n_vec.v)[D] = 0
// The relative sign in the second line follows from expanding [F] ^ n in
// components (and independently from a comoving-frame boost); boundary
// points with n_vec.v = 0 do not feel it.

namespace form4 {

inline constexpr double kOnBoundaryTol = 1e-9;

// Level-set description of a moving interface.  Points are supplied
// explicitly by callers; no root finding happens here.
struct MovingBoundary {
  std::function<double(double t, const Vec3&)> xi;
  std::function<Vec3(double t, const Vec3&)> velocity;

  // n = dXi by central differences, components (dXi/dt, dXi/dx_i).
  KVector normal_form(double t, const Vec3& p, double h = 1e-6) const {
    KVector n(1);
    n[0] = (xi(t + h, p) - xi(t - h, p)) / (2 * h);
    n[1] = (xi(t, {p.x + h, p.y, p.z}) - xi(t, {p.x - h, p.y, p.z})) / (2 * h);
    n[2] = (xi(t, {p.x, p.y + h, p.z}) - xi(t, {p.x, p.y - h, p.z})) / (2 * h);
    n[3] = (xi(t, {p.x, p.y, p.z + h}) - xi(t, {p.x, p.y, p.z - h})) / (2 * h);
    return n;
  }

  // Spatial normal n_vec = -grad Xi.
  Vec3 normal_spatial(double t, const Vec3& p, double h = 1e-6) const {
    const KVector n = normal_form(t, p, h);
    return {-n[1], -n[2], -n[3]};
  }
};

// Residual 3-form ([F_out] - [F_in]) ^ n; zero iff the homogeneous jump
// condition holds at the point.
inline KVector jump_residual_F(const KVector& F_out, const KVector& F_in, const KVector& n) {
  if (F_out.grade != 2 || F_in.grade != 2) throw std::invalid_argument("fields must be 2-forms");
  if (n.grade != 1) throw std::invalid_argument("normal must be a 1-form");
  return wedge(F_out - F_in, n);
}

// Residual 1-form [G] |_ n.
inline KVector jump_residual_G(const KVector& G_out, const KVector& G_in, const KVector& n,
                               const MetricAtPoint& m) {
  if (G_out.grade != 2 || G_in.grade != 2) throw std::invalid_argument("fields must be 2-forms");
  if (n.grade != 1) throw std::invalid_argument("normal must be a 1-form");
  return contract_right(G_out - G_in, n, m);
}

// Engineering residuals of the four jump conditions for field jumps
// [E], [B], [D], [H] across a boundary with spatial normal n_vec moving
// with velocity v.
struct EngineeringJumpResiduals {
  double normal_B = 0.0;
  Vec3 tangential_E{};  // n x [E] - (n.v)[B]
  double normal_D = 0.0;
  Vec3 tangential_H{};  // n x [H] + (n.v)[D]

  double max_abs() const {
    return std::fmax(std::fmax(std::fabs(normal_B), std::fabs(normal_D)),
                     std::fmax(tangential_E.max_abs(), tangential_H.max_abs()));
  }
};

inline EngineeringJumpResiduals engineering_jump_residuals(const Vec3& dE, const Vec3& dB,
                                                           const Vec3& dD, const Vec3& dH,
                                                           const Vec3& n, const Vec3& v) {
  EngineeringJumpResiduals out;
  const double nv = dot(n, v);
  out.normal_B = dot(n, dB);
  out.tangential_E = cross(n, dE) - nv * dB;
  out.normal_D = dot(n, dD);
  out.tangential_H = cross(n, dH) + nv * dD;
  return out;
}

// Residual of the kinematic constraint dXi/dt - n_vec . v at a point that
// must lie on the boundary.
inline double boundary_kinematics_residual(const MovingBoundary& b, double t, const Vec3& p,
                                           double h = 1e-6) {
  if (std::fabs(b.xi(t, p)) > kOnBoundaryTol) throw std::invalid_argument("point not on boundary");
  const KVector n = b.normal_form(t, p, h);
  const Vec3 n_vec = {-n[1], -n[2], -n[3]};
  if (n_vec.norm() < 1e-12) throw std::runtime_error("boundary normal vanishes");
  return n[0] - dot(n_vec, b.velocity(t, p));
}

}  // namespace form4
