#pragma once

#include <cmath>
#include <stdexcept>

#include "form4/constitutive.hpp"
#include "form4/vec3.hpp"

// Kinematics of a uniformly rotating reference frame in flat spacetime and
// the field/current transformations between the lab chart and the chart
// co-rotating with it.  Four charts appear:
//   lab Cartesian      (t, x, y, z)
//   lab cylindrical    (t, r, phi, z)
//   rotating Cartesian (t', x', y', z'),  x = x' cos wt - y' sin wt, ...
//   rotating cylindrical (t', r', phi', z'),  phi' = phi - w t exactly.

namespace form4 {

struct RotatingChart {
  double omega = 0.0;

  static Point4 lab_cyl_to_lab_cart(const Point4& p) {
    return {p[0], p[1] * std::cos(p[2]), p[1] * std::sin(p[2]), p[3]};
  }
  static Point4 lab_cart_to_lab_cyl(const Point4& p) {
    return {p[0], std::hypot(p[1], p[2]), std::atan2(p[2], p[1]), p[3]};
  }
  Point4 rot_cart_to_lab_cart(const Point4& p) const {
    const double c = std::cos(omega * p[0]), s = std::sin(omega * p[0]);
    return {p[0], p[1] * c - p[2] * s, p[1] * s + p[2] * c, p[3]};
  }
  Point4 lab_cart_to_rot_cart(const Point4& p) const {
    const double c = std::cos(omega * p[0]), s = std::sin(omega * p[0]);
    return {p[0], p[1] * c + p[2] * s, -p[1] * s + p[2] * c, p[3]};
  }
  static Point4 rot_cyl_to_rot_cart(const Point4& p) {
    return {p[0], p[1] * std::cos(p[2]), p[1] * std::sin(p[2]), p[3]};
  }
  // phi' = phi - w t, r' = r, exact.
  Point4 lab_cyl_to_rot_cyl(const Point4& p) const {
    return {p[0], p[1], p[2] - omega * p[0], p[3]};
  }
  Point4 rot_cyl_to_lab_cyl(const Point4& p) const {
    return {p[0], p[1], p[2] + omega * p[0], p[3]};
  }
};

// Kinematic data of the rotating frame at a lab-cylindrical event
// (t, r, phi, z).  The frame only has material support for w r < 1.
struct RotatingKinematics {
  double gamma = 1.0;
  double speed = 0.0;                       // w r
  std::array<double, 4> V_lab_cyl{};        // frame vector, lab cylindrical basis
  KVector v_form_cyl{1};                    // gamma (dt + w r^2 dphi), lab cylindrical
  KVector v_form_tetrad{1};                 // gamma (theta^0 + w r theta^2)
  Mat4 metric_rot_cart{};                   // components in (t', x', y', z')
  Mat4 metric_rot_cyl{};                    // components in (t', r', phi', z')
  Mat4 jacobian{};                          // d x^alpha / d x'^mu at the event
};

inline RotatingKinematics rotating_kinematics(double omega, const Point4& lab_cyl,
                                              double delta = 1e-6) {
  const double t = lab_cyl[0], r = lab_cyl[1], phi = lab_cyl[2];
  const double speed = omega * r;
  if (!(std::fabs(speed) < 1.0 - delta))
    throw std::domain_error("frame outside physical support");
  RotatingKinematics k;
  k.speed = speed;
  k.gamma = 1.0 / std::sqrt(1.0 - speed * speed);

  k.V_lab_cyl = {k.gamma, 0.0, k.gamma * omega, 0.0};
  k.v_form_cyl[0] = k.gamma;
  k.v_form_cyl[2] = k.gamma * speed * r;
  k.v_form_tetrad[0] = k.gamma;
  k.v_form_tetrad[2] = k.gamma * speed;

  // Rotating Cartesian coordinates of the event and its lab image.
  const double xp = r * std::cos(phi - omega * t);
  const double yp = r * std::sin(phi - omega * t);
  const double x = r * std::cos(phi);
  const double y = r * std::sin(phi);

  Mat4& gc = k.metric_rot_cart;
  gc[0][0] = 1.0 - speed * speed;
  gc[0][1] = gc[1][0] = omega * yp;
  gc[0][2] = gc[2][0] = -omega * xp;
  gc[1][1] = gc[2][2] = gc[3][3] = -1.0;

  Mat4& gy = k.metric_rot_cyl;
  gy[0][0] = 1.0 - speed * speed;
  gy[0][2] = gy[2][0] = -omega * r * r;
  gy[1][1] = -1.0;
  gy[2][2] = -r * r;
  gy[3][3] = -1.0;

  const double c = std::cos(omega * t), s = std::sin(omega * t);
  Mat4& J = k.jacobian;
  J[0][0] = 1.0;
  J[1][0] = -omega * y;
  J[1][1] = c;
  J[1][2] = -s;
  J[2][0] = omega * x;
  J[2][1] = s;
  J[2][2] = c;
  J[3][3] = 1.0;
  return k;
}

// Jacobian d x^alpha / d x'^mu at rotating-Cartesian position (x', y') and
// time t, and its inverse d x'^mu / d x^alpha.
inline Mat4 rotation_jacobian(double omega, double xp, double yp, double t) {
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  const double x = xp * c - yp * s;
  const double y = xp * s + yp * c;
  Mat4 J{};
  J[0][0] = 1.0;
  J[1][0] = -omega * y;
  J[1][1] = c;
  J[1][2] = -s;
  J[2][0] = omega * x;
  J[2][1] = s;
  J[2][2] = c;
  J[3][3] = 1.0;
  return J;
}

inline Mat4 rotation_jacobian_inverse(double omega, double xp, double yp, double t) {
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  Mat4 J{};
  J[0][0] = 1.0;
  J[1][0] = omega * yp;
  J[1][1] = c;
  J[1][2] = s;
  J[2][0] = -omega * xp;
  J[2][1] = -s;
  J[2][2] = c;
  J[3][3] = 1.0;
  return J;
}

namespace detail {

inline KVector pullback_2form(const KVector& F, const Mat4& J) {
  auto entry = [&](int a, int b) {
    if (a == b) return 0.0;
    int idx[2] = {a < b ? a : b, a < b ? b : a};
    const double val = F[canon_position(2, idx)];
    return a < b ? val : -val;
  };
  KVector out(2);
  for (int k = 0; k < out.count(); ++k) {
    const int mu = kCanon[2][k][0], nu = kCanon[2][k][1];
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) acc += J[a][mu] * J[b][nu] * entry(a, b);
    out[k] = acc;
  }
  return out;
}

}  // namespace detail

// Pullback of a lab-Cartesian 2-form to the rotating Cartesian chart at
// rotating position (x', y') and time t.
inline KVector transform_field_2form(const KVector& F_lab, double omega, double xp, double yp,
                                     double t, double delta = 1e-6) {
  if (F_lab.grade != 2) throw std::invalid_argument("field must be a 2-form");
  const double rp = std::hypot(xp, yp);
  if (!(std::fabs(omega * rp) < 1.0 - delta))
    throw std::domain_error("frame outside physical support");
  return detail::pullback_2form(F_lab, rotation_jacobian(omega, xp, yp, t));
}

// Inverse transformation, rotating components back to the lab chart.
inline KVector transform_field_2form_inverse(const KVector& F_rot, double omega, double xp,
                                             double yp, double t) {
  if (F_rot.grade != 2) throw std::invalid_argument("field must be a 2-form");
  return detail::pullback_2form(F_rot, rotation_jacobian_inverse(omega, xp, yp, t));
}

// Lab electric/magnetic 3-vectors packed into the standard field-strength
// component layout F_{0i} = E_i, F_{12} = -B_3, F_{13} = B_2, F_{23} = -B_1.
inline KVector field_2form_from_vectors(const Vec3& E, const Vec3& B) {
  KVector F(2);
  F[0] = E.x;
  F[1] = E.y;
  F[2] = E.z;
  F[3] = -B.z;
  F[4] = B.y;
  F[5] = -B.x;
  return F;
}

inline void vectors_from_field_2form(const KVector& F, Vec3* E, Vec3* B) {
  if (F.grade != 2) throw std::invalid_argument("field must be a 2-form");
  if (E) *E = {F[0], F[1], F[2]};
  if (B) *B = {-F[5], F[4], -F[3]};
}

// Closed-form transformed fields for the same pullback, with the axial
// electric line using the lab coordinates of the event.
inline void transform_field_closed_form(const Vec3& E, const Vec3& B, double omega, double xp,
                                        double yp, double t, Vec3* E_rot, Vec3* B_rot) {
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  const double x = xp * c - yp * s;
  const double y = xp * s + yp * c;
  E_rot->x = E.x * c + E.y * s + omega * xp * B.z;
  E_rot->y = -E.x * s + E.y * c + omega * yp * B.z;
  E_rot->z = E.z - omega * y * B.y - omega * x * B.x;
  B_rot->x = B.x * c + B.y * s;
  B_rot->y = -B.x * s + B.y * c;
  B_rot->z = B.z;
}

// Charge/current density transformation into the rotating chart:
// rho' = rho, j' picks up the convective terms of the frame motion.
struct CurrentDensity {
  double rho = 0.0;
  Vec3 j{};
};

inline CurrentDensity transform_current(double rho, const Vec3& j, double omega, double xp,
                                        double yp, double t) {
  const double c = std::cos(omega * t), s = std::sin(omega * t);
  CurrentDensity out;
  out.rho = rho;
  out.j.x = omega * yp * rho + j.x * c + j.y * s;
  out.j.y = -omega * xp * rho - j.x * s + j.y * c;
  out.j.z = j.z;
  return out;
}

// Constitutive relations of the rotating medium in engineering 3-vector
// form, fields expressed in the co-rotating chart and v the local velocity
// of the medium point.
struct RotatingConstitutive {
  Vec3 D, H, P, M;
};

inline RotatingConstitutive rotating_constitutive_engineering(const Vec3& E_rot, const Vec3& B_rot,
                                                              const Vec3& v, const MediumParams& med) {
  med.validate();
  const double v2 = dot(v, v);
  if (!(v2 < 1.0)) throw std::domain_error("medium velocity must be subluminal");
  const double gamma2 = 1.0 / (1.0 - v2);
  const double em = med.epsilon * med.mu;
  RotatingConstitutive out;
  out.D = med.epsilon * E_rot;
  out.H = (1.0 / med.mu) * (B_rot + gamma2 * (em - 1.0) * cross(v, E_rot));
  out.P = (med.epsilon - 1.0) * E_rot;
  out.M = (1.0 - 1.0 / med.mu) * B_rot + (gamma2 * (1.0 - em) / med.mu) * cross(v, E_rot);
  return out;
}

}  // namespace form4
