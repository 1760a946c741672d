#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "form4/boundary.hpp"
#include "form4/calculus.hpp"
#include "form4/constitutive.hpp"
#include "form4/cylinder_tetrad.hpp"
#include "form4/quadrature.hpp"
#include "form4/rotating.hpp"

// Rotating magnetic insulator in a uniform axial magnetic field: a hollow
// cylinder of permittivity eps and permeability mu spinning at angular
// velocity omega inside an external field B0 along z.  The excitation
// inside is K(r) theta^01 + L theta^12 with K = c1/r and L = c2; the
// integration constants are fixed against the exterior field through the
// jump conditions, never hard-coded, and the radial field functions follow
// from the constitutive relation pointwise.

namespace form4::wwe {

inline constexpr double kSupportDelta = 1e-6;
inline constexpr double kConditionLimit = 1e12;

struct Config {
  double r1 = 0.1;
  double r2 = 0.2;
  double omega = 0.0;
  MediumParams med{};
  double B0 = 1.0;
  double height = 1.0;
  double moment_of_inertia = 0.0;

  void validate() const {
    if (!(r1 > 0.0)) throw std::invalid_argument("r1 must be positive");
    if (!(r2 >= r1)) throw std::invalid_argument("r2 must be >= r1");
    if (!(std::fabs(omega) * r2 < 1.0 - kSupportDelta))
      throw std::domain_error("superluminal rim");
    if (!std::isfinite(B0)) throw std::invalid_argument("B0 must be finite");
    if (!(height > 0.0)) throw std::invalid_argument("height must be positive");
    if (!(moment_of_inertia >= 0.0))
      throw std::invalid_argument("moment of inertia must be nonnegative");
    med.validate();
  }
};

// Exterior excitation in tetrad components: G = F = B0 theta^1 ^ theta^2.
inline KVector exterior_excitation_tetrad(double B0) {
  KVector G(2);
  int idx[2] = {1, 2};
  G[canon_position(2, idx)] = B0;
  return G;
}

struct InteriorSolution {
  Config config;
  double c1 = 0.0;  // K(r) = c1 / r
  double c2 = 0.0;  // L = c2

  double K(double r) const { return c1 / r; }
  double L() const { return c2; }

  KVector excitation_tetrad(double r) const {
    KVector G(2);
    G[0] = K(r);  // (01) slot
    G[3] = L();   // (12) slot
    return G;
  }

  struct RadialFields {
    double E = 0.0;  // radial electric coefficient, theta^1
    double B = 0.0;  // azimuthal magnetic coefficient, theta^1 ^ theta^2 slot of F
  };

  // Invert the pointwise constitutive map (E, B) -> (K, L) at radius r.
  RadialFields radial_fields(double r) const {
    const double em = config.med.epsilon * config.med.mu;
    const double w = config.omega * r;
    if (!(std::fabs(w) < 1.0 - kSupportDelta)) throw std::domain_error("superluminal rim");
    const double a11 = em - w * w, a12 = w * (em - 1.0);
    const double a21 = w * (1.0 - em), a22 = 1.0 - em * w * w;
    const double det = a11 * a22 - a12 * a21;
    const double frob = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
    if (!(std::fabs(det) * kConditionLimit > frob))
      throw std::runtime_error("constitutive system near-singular");
    const double rhs_scale = config.med.mu * (1.0 - w * w);
    const double b1 = rhs_scale * K(r), b2 = rhs_scale * L();
    RadialFields out;
    out.E = (b1 * a22 - a12 * b2) / det;
    out.B = (a11 * b2 - b1 * a21) / det;
    return out;
  }

  double calE(double r) const { return radial_fields(r).E; }
  double calB(double r) const { return radial_fields(r).B; }

  KVector field_tetrad(double r) const {
    const RadialFields f = radial_fields(r);
    KVector F(2);
    F[0] = f.E;  // (01)
    F[3] = f.B;  // (12)
    return F;
  }
};

// Fix (c1, c2) by driving the excitation jump residual against the exterior
// field to zero at both rims.  The residual is linear in the constants, so
// two probe evaluations determine the least-squares system exactly.
inline InteriorSolution solve(const Config& config) {
  config.validate();
  const MetricAtPoint eta = MetricAtPoint::minkowski();
  const KVector n = KVector::basis(1, 1);  // theta^1
  const KVector G_out = exterior_excitation_tetrad(config.B0);

  auto residual = [&](double c1, double c2) {
    InteriorSolution trial;
    trial.config = config;
    trial.c1 = c1;
    trial.c2 = c2;
    std::array<double, 8> rows{};
    int k = 0;
    for (double r : {config.r1, config.r2}) {
      const KVector res = jump_residual_G(G_out, trial.excitation_tetrad(r), n, eta);
      for (int i = 0; i < 4; ++i) rows[k++] = res[i];
    }
    return rows;
  };

  const auto r0 = residual(0.0, 0.0);
  const auto ra = residual(1.0, 0.0);
  const auto rb = residual(0.0, 1.0);

  // Normal equations for the 8x2 linear system  A c = -r0.
  double ata[2][2] = {{0, 0}, {0, 0}};
  double atb[2] = {0, 0};
  for (int i = 0; i < 8; ++i) {
    const double a0 = ra[i] - r0[i];
    const double a1 = rb[i] - r0[i];
    ata[0][0] += a0 * a0;
    ata[0][1] += a0 * a1;
    ata[1][1] += a1 * a1;
    atb[0] += a0 * -r0[i];
    atb[1] += a1 * -r0[i];
  }
  ata[1][0] = ata[0][1];
  const double det = ata[0][0] * ata[1][1] - ata[0][1] * ata[1][0];
  if (!(std::fabs(det) > 0.0)) throw std::runtime_error("boundary system degenerate");

  InteriorSolution sol;
  sol.config = config;
  sol.c1 = (atb[0] * ata[1][1] - ata[0][1] * atb[1]) / det;
  sol.c2 = (ata[0][0] * atb[1] - atb[0] * ata[1][0]) / det;
  return sol;
}

struct FieldsAt {
  KVector F;      // tetrad components
  KVector E_lab;  // theta^0 _| F
  KVector H_lab;  // theta^0 _| *F
};

inline FieldsAt fields_at(const InteriorSolution& sol, double r) {
  if (!(r >= sol.config.r1 - 1e-12 && r <= sol.config.r2 + 1e-12))
    throw std::domain_error("radius outside the annulus");
  const MetricAtPoint eta = MetricAtPoint::minkowski();
  const KVector theta0 = KVector::basis(1, 0);
  FieldsAt out;
  out.F = sol.field_tetrad(r);
  out.E_lab = contract_left(theta0, out.F, eta);
  out.H_lab = contract_left(theta0, hodge(out.F, eta), eta);
  return out;
}

struct Potential {
  double V_exact = 0.0;        // radial line integral of the electric field
  double V_small_omega = 0.0;  // leading closed form (B0 w / 2 eps)(1 - mu eps)(r2^2 - r1^2)
};

inline Potential potential(const InteriorSolution& sol) {
  const Config& c = sol.config;
  Potential out;
  out.V_small_omega = 0.5 * c.B0 * c.omega / c.med.epsilon *
                      (1.0 - c.med.mu * c.med.epsilon) * (c.r2 * c.r2 - c.r1 * c.r1);
  out.V_exact = integrate([&](double r) { return sol.calE(r); }, c.r1, c.r2);
  return out;
}

struct AngularMomentum {
  double L_mech_z = 0.0;
  double L_em_numeric_z = 0.0;        // 2 pi Z int r^2 f(r) dr
  double L_em_closed_magnitude = 0.0; // (pi Z mu^2 / 2 eps) B0^2 |w| |mu eps - 1| (r2^4 - r1^4)
  std::vector<std::pair<double, double>> f_samples;  // (r, azimuthal E x H)
};

// Azimuthal component of E x H built from the lab split of the interior
// field through the orthonormal-triad bridge.  The transverse components of
// the integrand carry a cos/sin azimuth factor and drop out of the full
// azimuthal integral; only the axial component is accumulated.
inline AngularMomentum angular_momentum(const InteriorSolution& sol, int n_samples = 33) {
  const Config& c = sol.config;
  auto f = [&](double r) {
    const FieldsAt fld = fields_at(sol, r);
    const Vec3 E = engineering_vector(fld.E_lab);
    const Vec3 H = engineering_vector(fld.H_lab);
    return cross(E, H).y;  // e_phi slot of the (e_r, e_phi, e_z) triad
  };
  AngularMomentum out;
  out.L_mech_z = c.moment_of_inertia * c.omega;
  out.L_em_closed_magnitude = M_PI * c.height * c.med.mu * c.med.mu / (2.0 * c.med.epsilon) *
                              c.B0 * c.B0 * std::fabs(c.omega) *
                              std::fabs(c.med.mu * c.med.epsilon - 1.0) *
                              (std::pow(c.r2, 4) - std::pow(c.r1, 4));
  // For omega = 0 or mu eps = 1 the integrand is identically zero (the
  // radial electric coefficient vanishes exactly), so the quadrature
  // returns an exact zero without special casing.
  out.L_em_numeric_z =
      2.0 * M_PI * c.height * integrate([&](double r) { return r * r * f(r); }, c.r1, c.r2);
  if (n_samples > 1) {
    out.f_samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
      const double r = c.r1 + (c.r2 - c.r1) * i / (n_samples - 1);
      out.f_samples.emplace_back(r, f(r));
    }
  }
  return out;
}

struct ResidualReport {
  double h = 0.0;
  double tolerance = 0.0;
  double dF_max = 0.0;
  double dstarG_max = 0.0;
  double jump_r1 = 0.0;
  double jump_r2 = 0.0;

  bool pass() const {
    return dF_max <= tolerance && dstarG_max <= tolerance && jump_r1 <= tolerance &&
           jump_r2 <= tolerance;
  }
};

// Full verification sweep: the two field equations evaluated numerically in
// the lab cylindrical chart at interior radii, plus the jump residuals of F
// and G at both rims against the exterior field.
inline ResidualReport residual_report(const InteriorSolution& sol, double h = 1e-4,
                                      int n_samples = 16) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (n_samples < 1) throw std::invalid_argument("need at least one sample radius");
  const Config& c = sol.config;
  const MetricAtPoint eta = MetricAtPoint::minkowski();

  ResidualReport rep;
  rep.h = h;
  rep.tolerance = std::fmax(1e-10, 10.0 * h * h);

  ChartFieldSampler F_coord;
  F_coord.grade = 2;
  F_coord.metric = [](const Point4& p) { return MetricAtPoint::cylindrical(p[1]); };
  F_coord.field = [&sol](const Point4& p) {
    return tetrad_to_cyl_coords(sol.field_tetrad(p[1]), p[1]);
  };

  ChartFieldSampler starG_coord;
  starG_coord.grade = 2;
  starG_coord.metric = F_coord.metric;
  starG_coord.field = [&sol](const Point4& p) {
    const double r = p[1];
    const FrameVelocity frame = corotating_frame_tetrad(sol.config.omega, r);
    const KVector G_tetrad = constitutive_minkowski(sol.field_tetrad(r), frame, sol.config.med,
                                                    MetricAtPoint::minkowski());
    const KVector G_coord = tetrad_to_cyl_coords(G_tetrad, r);
    return hodge(G_coord, MetricAtPoint::cylindrical(r));
  };

  const double lo = c.r1 + 2.0 * h, hi = c.r2 - 2.0 * h;
  for (int i = 0; i < n_samples; ++i) {
    const double r =
        (n_samples == 1 || hi <= lo) ? 0.5 * (c.r1 + c.r2) : lo + (hi - lo) * i / (n_samples - 1);
    const Point4 x = {0.1, r, 0.3, -0.2};
    rep.dF_max = std::fmax(rep.dF_max, exterior_derivative(F_coord, x, h).max_abs());
    rep.dstarG_max = std::fmax(rep.dstarG_max, exterior_derivative(starG_coord, x, h).max_abs());
  }

  const KVector n = KVector::basis(1, 1);
  const KVector F_out = exterior_excitation_tetrad(c.B0);  // vacuum: G = F
  for (double r : {c.r1, c.r2}) {
    const KVector F_in = sol.field_tetrad(r);
    const KVector G_in = sol.excitation_tetrad(r);
    const double jf = jump_residual_F(F_out, F_in, n).max_abs();
    const double jg = jump_residual_G(F_out, G_in, n, eta).max_abs();
    (r == c.r1 ? rep.jump_r1 : rep.jump_r2) = std::fmax(jf, jg);
  }
  return rep;
}

enum class SweepParam { omega, epsilon, mu, B0 };

inline const char* sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::omega: return "omega";
    case SweepParam::epsilon: return "epsilon";
    case SweepParam::mu: return "mu";
    case SweepParam::B0: return "B0";
  }
  return "?";
}

struct SweepRow {
  double value = 0.0;
  bool ok = false;
  std::string error;
  double V_exact = 0.0;
  double V_small_omega = 0.0;
  double L_em_numeric_z = 0.0;
  double L_em_closed_magnitude = 0.0;
};

// Rows are emitted in parameter order; invalid points are marked and the
// sweep continues.
inline std::vector<SweepRow> sweep(const Config& base, SweepParam param, double from, double to,
                                   int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    SweepRow row;
    row.value = (steps == 1) ? from : from + (to - from) * i / (steps - 1);
    Config c = base;
    switch (param) {
      case SweepParam::omega: c.omega = row.value; break;
      case SweepParam::epsilon: c.med.epsilon = row.value; break;
      case SweepParam::mu: c.med.mu = row.value; break;
      case SweepParam::B0: c.B0 = row.value; break;
    }
    try {
      const InteriorSolution sol = solve(c);
      const Potential pot = potential(sol);
      const AngularMomentum ang = angular_momentum(sol, 0);
      row.V_exact = pot.V_exact;
      row.V_small_omega = pot.V_small_omega;
      row.L_em_numeric_z = ang.L_em_numeric_z;
      row.L_em_closed_magnitude = ang.L_em_closed_magnitude;
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace form4::wwe
