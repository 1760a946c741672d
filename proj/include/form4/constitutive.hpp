#pragma once

#include <array>
#include <stdexcept>

#include "form4/calculus.hpp"
#include "form4/frames.hpp"

// Minkowski constitutive relation for a non-dispersive homogeneous isotropic
// linear medium at rest in a frame v, plus polarization/bound-source fields
// and the vacuum constitutive tensor.

namespace form4 {

struct MediumParams {
  double epsilon = 1.0;  // relative permittivity, natural units
  double mu = 1.0;       // relative permeability

  void validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  }
};

// Closed form G = (1/mu)(eps*mu - 1) v ^ (v _| F) + F/mu.
inline KVector constitutive_minkowski(const KVector& F, const FrameVelocity& frame,
                                      const MediumParams& med, const MetricAtPoint& m) {
  med.validate();
  require_unit_frame(frame, m);
  if (F.grade != 2) throw std::invalid_argument("field must be a 2-form");
  const KVector vF = contract_left(frame.v, F, m);
  return (1.0 / med.mu) * ((med.epsilon * med.mu - 1.0) * wedge(frame.v, vF) + F);
}

// Defining construction G = eps v ^ (v _| F) - (1/mu) * (v ^ (v _| *F)),
// kept as an independent route for cross-checking the closed form.
inline KVector constitutive_minkowski_defining(const KVector& F, const FrameVelocity& frame,
                                               const MediumParams& med, const MetricAtPoint& m) {
  med.validate();
  require_unit_frame(frame, m);
  if (F.grade != 2) throw std::invalid_argument("field must be a 2-form");
  const KVector vF = contract_left(frame.v, F, m);
  const KVector vSF = contract_left(frame.v, hodge(F, m), m);
  return med.epsilon * wedge(frame.v, vF) - (1.0 / med.mu) * hodge(wedge(frame.v, vSF), m);
}

// Componentwise consistency residuals of a constitutive pair (F, G):
//   electric[nu] = v^mu G_{mu nu} - eps v^mu F_{mu nu}
//   magnetic[sigma] = mu e^{mu nu kappa sigma} G_{mu nu} v_kappa
//                       - e^{mu nu kappa sigma} F_{mu nu} v_kappa
// with v_kappa = g_{kappa iota} v^iota and e the permutation symbol.
struct ConstitutiveResiduals {
  std::array<double, 4> electric{};
  std::array<double, 4> magnetic{};

  double max_abs() const {
    double r = 0.0;
    for (double x : electric) r = std::fmax(r, std::fabs(x));
    for (double x : magnetic) r = std::fmax(r, std::fabs(x));
    return r;
  }
};

inline ConstitutiveResiduals constitutive_component_checks(const KVector& F, const KVector& G,
                                                           const FrameVelocity& frame,
                                                           const MediumParams& med,
                                                           const MetricAtPoint& m) {
  med.validate();
  if (F.grade != 2 || G.grade != 2) throw std::invalid_argument("fields must be 2-forms");
  const KVector v_up = raise_indices(frame.v, m);

  auto entry = [](const KVector& X, int mu, int nu) {
    if (mu == nu) return 0.0;
    int idx[2] = {mu < nu ? mu : nu, mu < nu ? nu : mu};
    const double val = X[canon_position(2, idx)];
    return mu < nu ? val : -val;
  };

  ConstitutiveResiduals out;
  for (int nu = 0; nu < 4; ++nu) {
    double acc = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      acc += v_up[mu] * (entry(G, mu, nu) - med.epsilon * entry(F, mu, nu));
    out.electric[nu] = acc;
  }
  for (int sigma = 0; sigma < 4; ++sigma) {
    double acc = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        for (int kappa = 0; kappa < 4; ++kappa) {
          int idx[4] = {mu, nu, kappa, sigma};
          const int eps = permutation_sign(idx, 4, nullptr, 0);
          if (eps == 0) continue;
          acc += eps * (med.mu * entry(G, mu, nu) - entry(F, mu, nu)) * frame.v[kappa];
        }
      }
    }
    out.magnetic[sigma] = acc;
  }
  return out;
}

// Vacuum constitutive tensor chi^{rho sigma mu nu} = g^{rho mu} g^{sigma nu}
// - g^{rho nu} g^{sigma mu}.
struct VacuumChi {
  double c[4][4][4][4];
};

inline VacuumChi vacuum_chi(const MetricAtPoint& m) {
  VacuumChi chi;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          chi.c[r][s][mu][nu] = m.g_inv[r][mu] * m.g_inv[s][nu] - m.g_inv[r][nu] * m.g_inv[s][mu];
  return chi;
}

// Contraction (1/2) chi^{mu nu alpha beta} F_{alpha beta}, returned as
// canonical contravariant components; equals raise_indices for vacuum chi.
inline KVector apply_chi(const VacuumChi& chi, const KVector& F) {
  if (F.grade != 2) throw std::invalid_argument("field must be a 2-form");
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
      for (int b = 0; b < 4; ++b) acc += chi.c[mu][nu][a][b] * entry(a, b);
    out[k] = 0.5 * acc;
  }
  return out;
}

// Polarization split Pi = F - G with Pi = v ^ P - *(v ^ M), P = E - D,
// M = B - H (sign convention as stated; opposite to the common engineering
// choice).
struct PolarizationSplit {
  KVector Pi;  // grade 2
  KVector P;   // grade 1
  KVector M;   // grade 1
};

inline PolarizationSplit polarization_split(const KVector& F, const KVector& G,
                                            const FrameVelocity& frame, const MetricAtPoint& m) {
  const FieldSplit s = split_fields(F, G, frame, m);
  PolarizationSplit out;
  out.Pi = F - G;
  out.P = s.E - s.D;
  out.M = s.B - s.H;
  return out;
}

// Bound current 3-form -d*Pi of a polarization field sampler.
inline KVector bound_current(const ChartFieldSampler& pi_field, const Point4& x, double h = 1e-4) {
  if (pi_field.grade != 2) throw std::invalid_argument("polarization sampler must have grade 2");
  ChartFieldSampler star_pi;
  star_pi.grade = 2;
  star_pi.metric = pi_field.metric;
  star_pi.field = [&pi_field](const Point4& p) {
    return hodge(pi_field.field(p), pi_field.metric(p));
  };
  return -1.0 * exterior_derivative(star_pi, x, h);
}

// Frame decomposition of a 3-form J = z ^ j + rho into its current 2-form
// and spatial charge 3-form parts.
struct ThreeFormSplit {
  KVector current;  // grade 2
  KVector charge;   // grade 3, spatial (z _| charge = 0)
};

inline ThreeFormSplit frame_decompose_3form(const KVector& J, const FrameVelocity& frame,
                                            const MetricAtPoint& m) {
  if (J.grade != 3) throw std::invalid_argument("expected a 3-form");
  require_unit_frame(frame, m);
  ThreeFormSplit out;
  out.current = contract_left(frame.v, J, m);
  out.charge = J - wedge(frame.v, out.current);
  return out;
}

}  // namespace form4
