#include <catch2/catch_amalgamated.hpp>

#include "form4/random_inputs.hpp"
#include "form4/wilson.hpp"
#include "helpers.hpp"

using namespace form4;
using testutil::max_abs_diff;
using testutil::rel_err;

namespace {

wwe::Config make_config(double r1, double r2, double omega, double eps, double mu, double B0,
                        double Z = 1.0, double I = 0.0) {
  wwe::Config c;
  c.r1 = r1;
  c.r2 = r2;
  c.omega = omega;
  c.med = MediumParams{eps, mu};
  c.B0 = B0;
  c.height = Z;
  c.moment_of_inertia = I;
  return c;
}

// Closed-form interior coefficients.
double calE_closed(const wwe::Config& c, double r) {
  const double em = c.med.mu * c.med.epsilon;
  const double w2 = c.omega * c.omega * r * r;
  return c.B0 * c.omega * r * (1.0 - em) / (c.med.epsilon * (1.0 - w2));
}
double calB_closed(const wwe::Config& c, double r) {
  const double em = c.med.mu * c.med.epsilon;
  const double w2 = c.omega * c.omega * r * r;
  return -c.B0 * (w2 - em) / (c.med.epsilon * (1.0 - w2));
}

// Antiderivative route for the radial line integral of the electric field.
double V_exact_closed(const wwe::Config& c) {
  if (c.omega == 0.0) return 0.0;
  const double em = c.med.mu * c.med.epsilon;
  const double a1 = c.omega * c.omega * c.r1 * c.r1;
  const double a2 = c.omega * c.omega * c.r2 * c.r2;
  return c.B0 * (1.0 - em) / (2.0 * c.med.epsilon * c.omega) * std::log((1.0 - a1) / (1.0 - a2));
}

}  // namespace

TEST_CASE("interior solve") {
  SECTION("constants come out of the jump conditions") {
    const auto sol = wwe::solve(make_config(0.1, 0.2, 0.05, 6.0, 2.0, 1.7));
    REQUIRE(std::fabs(sol.c1) < 1e-14);
    REQUIRE(std::fabs(sol.c2 - 1.7) < 1e-14 * 1.7);
    REQUIRE(sol.K(0.15) == 0.0);
    REQUIRE(std::fabs(sol.L() - 1.7) < 1e-14 * 1.7);
  }
  SECTION("vacuum: interior equals exterior") {
    const auto sol = wwe::solve(make_config(0.1, 0.3, 0.2, 1.0, 1.0, 2.0));
    for (double r : {0.1, 0.17, 0.3}) {
      REQUIRE(std::fabs(sol.calE(r)) < 1e-14);
      REQUIRE(std::fabs(sol.calB(r) - 2.0) < 1e-13);
    }
  }
  SECTION("static medium: E = 0, B = mu B0") {
    const auto sol = wwe::solve(make_config(0.1, 0.2, 0.0, 3.0, 2.5, 1.2));
    REQUIRE(sol.calE(0.15) == 0.0);
    REQUIRE(std::fabs(sol.calB(0.15) - 2.5 * 1.2) < 1e-13);
  }
  SECTION("pointwise fields match the closed forms and solve the linear system") {
    const auto cfg = make_config(0.3, 0.7, 0.1, 3.0, 2.0, 1.0);
    const auto sol = wwe::solve(cfg);
    const double r = 0.5;
    const auto f = sol.radial_fields(r);
    REQUIRE(std::fabs(f.E - calE_closed(cfg, r)) < 1e-14);
    REQUIRE(std::fabs(f.B - calB_closed(cfg, r)) < 1e-14);
    // Substitution back into the constitutive system.
    const double em = 6.0, w = 0.1 * r;
    const double lhs1 = f.E * (em - w * w) + f.B * w * (em - 1.0);
    const double lhs2 =
        (f.E * w * (1.0 - em) + f.B * (1.0 - em * w * w)) / (2.0 * (1.0 - w * w));
    REQUIRE(std::fabs(lhs1) < 1e-14);
    REQUIRE(std::fabs(lhs2 - 1.0) < 1e-14);
  }
  SECTION("substitution oracle at random admissible parameters") {
    RandomInputs rnd(401);
    for (int c = 0; c < 100; ++c) {
      const double eps = rnd.uniform(0.3, 8.0), mu = rnd.uniform(0.3, 8.0);
      const double r1 = rnd.uniform(0.05, 0.4), r2 = r1 + rnd.uniform(0.05, 0.5);
      const double omega = rnd.uniform(-0.9, 0.9) / r2;
      const double B0 = rnd.uniform(-2.0, 2.0);
      const auto cfg = make_config(r1, r2, omega, eps, mu, B0);
      const auto sol = wwe::solve(cfg);
      const double em = eps * mu;
      for (int i = 0; i < 5; ++i) {
        const double r = rnd.uniform(r1, r2);
        const auto f = sol.radial_fields(r);
        const double w = omega * r;
        const double res1 = f.E * (em - w * w) + f.B * w * (em - 1.0);
        const double res2 =
            f.E * w * (1.0 - em) + f.B * (1.0 - em * w * w) - mu * (1.0 - w * w) * B0;
        const double scale = std::fmax(1.0, std::fabs(B0) * mu);
        REQUIRE(std::fabs(res1) < 1e-12 * scale);
        REQUIRE(std::fabs(res2) < 1e-12 * scale);
      }
    }
  }
  SECTION("constitutive oracle: the covariant relation reproduces K and L") {
    const auto cfg = make_config(0.2, 0.5, 0.3, 4.0, 1.5, 1.1);
    const auto sol = wwe::solve(cfg);
    const MetricAtPoint eta = MetricAtPoint::minkowski();
    for (double r : {0.2, 0.34, 0.5}) {
      const FrameVelocity frame = corotating_frame_tetrad(cfg.omega, r);
      const KVector G = constitutive_minkowski(sol.field_tetrad(r), frame, cfg.med, eta);
      REQUIRE(rel_err(G, sol.excitation_tetrad(r)) < 1e-12);
    }
  }
  SECTION("invalid configurations rejected") {
    REQUIRE_THROWS_AS(wwe::solve(make_config(0.0, 0.2, 0.1, 2, 1, 1)), std::invalid_argument);
    REQUIRE_THROWS_AS(wwe::solve(make_config(0.3, 0.2, 0.1, 2, 1, 1)), std::invalid_argument);
    REQUIRE_THROWS_AS(wwe::solve(make_config(0.1, 0.2, 5.1, 2, 1, 1)), std::domain_error);
    REQUIRE_THROWS_AS(wwe::solve(make_config(0.1, 0.2, 0.1, -2, 1, 1)), std::invalid_argument);
  }
}

TEST_CASE("interior field evaluation") {
  SECTION("vacuum limit") {
    const auto sol = wwe::solve(make_config(0.1, 0.2, 0.1, 1.0, 1.0, 1.5));
    const auto f = wwe::fields_at(sol, 0.15);
    REQUIRE(f.E_lab.max_abs() < 1e-14);
    KVector H_expect(1);
    H_expect[3] = 1.5;
    REQUIRE(rel_err(f.H_lab, H_expect) < 1e-13);
  }
  SECTION("split structure: E radial, H axial") {
    const auto cfg = make_config(0.1, 0.25, 0.4, 5.0, 1.2, 0.8);
    const auto sol = wwe::solve(cfg);
    const double r = 0.2;
    const auto f = wwe::fields_at(sol, r);
    REQUIRE(std::fabs(f.E_lab[1] - sol.calE(r)) < 1e-14);
    REQUIRE(f.E_lab[0] == 0.0);
    REQUIRE(f.E_lab[2] == 0.0);
    REQUIRE(std::fabs(f.H_lab[3] - sol.calB(r)) < 1e-14);
  }
  SECTION("dense medium dragged forward: radial field negative for omega > 0") {
    const auto cfg = make_config(0.1, 0.25, 0.4, 5.0, 1.2, 0.8);  // mu eps > 1
    const auto sol = wwe::solve(cfg);
    for (double r = 0.1; r <= 0.25; r += 0.01) REQUIRE(sol.calE(r) < 0.0);
  }
  SECTION("boundary fields satisfy both jump conditions") {
    const auto cfg = make_config(0.15, 0.35, 0.25, 3.0, 2.0, 1.0);
    const auto sol = wwe::solve(cfg);
    const MetricAtPoint eta = MetricAtPoint::minkowski();
    const KVector n = KVector::basis(1, 1);
    const KVector exterior = wwe::exterior_excitation_tetrad(cfg.B0);
    for (double r : {cfg.r1, cfg.r2}) {
      const auto f = wwe::fields_at(sol, r);
      REQUIRE(jump_residual_F(exterior, f.F, n).max_abs() < 1e-12);
      REQUIRE(jump_residual_G(exterior, sol.excitation_tetrad(r), n, eta).max_abs() < 1e-12);
    }
  }
  SECTION("radius outside the annulus rejected") {
    const auto sol = wwe::solve(make_config(0.1, 0.2, 0.0, 2, 1, 1));
    REQUIRE_THROWS_AS(wwe::fields_at(sol, 0.05), std::domain_error);
    REQUIRE_THROWS_AS(wwe::fields_at(sol, 0.3), std::domain_error);
  }
}

TEST_CASE("generated potential") {
  SECTION("no rotation, no voltage") {
    const auto p = wwe::potential(wwe::solve(make_config(0.1, 0.2, 0.0, 6.0, 1.0, 1.0)));
    REQUIRE(p.V_exact == 0.0);
    REQUIRE(p.V_small_omega == 0.0);
  }
  SECTION("impedance-matched medium mu eps = 1 gives no voltage") {
    const auto p = wwe::potential(wwe::solve(make_config(0.1, 0.2, 0.05, 4.0, 0.25, 1.0)));
    REQUIRE(std::fabs(p.V_exact) < 1e-15);
    REQUIRE(p.V_small_omega == 0.0);
  }
  SECTION("quadrature agrees with the antiderivative route") {
    const auto cfg = make_config(0.1, 0.2, 0.01, 6.0, 1.0, 1.0);
    const auto p = wwe::potential(wwe::solve(cfg));
    const double closed = V_exact_closed(cfg);
    REQUIRE(std::fabs(p.V_exact - closed) < 1e-6 * std::fabs(closed));
    REQUIRE(std::fabs(p.V_exact - closed) < 1e-9 * std::fabs(closed));  // actual accuracy
    // and the small-omega closed form is the stated leading expression
    REQUIRE(std::fabs(p.V_small_omega - 0.5 * 1.0 * 0.01 * (1.0 / 6.0) * (1.0 - 6.0) *
                                            (0.04 - 0.01)) < 1e-18);
  }
  SECTION("leading-order agreement within (omega r2)^2") {
    for (double omega : {5e-3, 5e-2, 0.5}) {
      const auto cfg = make_config(0.1, 0.2, omega, 6.0, 1.0, 1.0);
      const auto p = wwe::potential(wwe::solve(cfg));
      const double wr2 = omega * 0.2;
      REQUIRE(std::fabs(p.V_exact - p.V_small_omega) <= wr2 * wr2 * std::fabs(p.V_small_omega));
    }
  }
  SECTION("quadratic convergence of the small-omega form") {
    std::vector<double> rel;
    for (double omega : {4e-3, 4e-2, 4e-1}) {
      const auto cfg = make_config(0.1, 0.2, omega, 6.0, 1.0, 1.0);
      const auto p = wwe::potential(wwe::solve(cfg));
      rel.push_back(std::fabs(p.V_exact - p.V_small_omega) / std::fabs(p.V_small_omega));
    }
    const double order1 = std::log10(rel[1] / rel[0]);
    const double order2 = std::log10(rel[2] / rel[1]);
    REQUIRE(std::fabs(order1 - 2.0) < 0.1);
    REQUIRE(std::fabs(order2 - 2.0) < 0.1);
  }
}

TEST_CASE("angular momentum bookkeeping") {
  SECTION("no rotation") {
    const auto a = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, 0.0, 6.0, 1.0, 1.0, 1.0, 2.0)));
    REQUIRE(a.L_em_numeric_z == 0.0);
    REQUIRE(a.L_mech_z == 0.0);
  }
  SECTION("impedance-matched medium stores no field angular momentum") {
    const auto a = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, 0.03, 4.0, 0.25, 1.0)));
    REQUIRE(a.L_em_numeric_z == 0.0);
    REQUIRE(a.L_em_closed_magnitude == 0.0);
  }
  SECTION("mechanical part is I omega") {
    const auto a = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, 0.02, 6.0, 1.0, 1.0, 1.0, 3.5)));
    REQUIRE(a.L_mech_z == 3.5 * 0.02);
  }
  SECTION("numeric magnitude matches the closed form at small omega") {
    const auto cfg = make_config(0.1, 0.2, 0.01, 6.0, 1.0, 1.0, 1.0, 0.0);
    const auto a = wwe::angular_momentum(wwe::solve(cfg));
    REQUIRE(std::fabs(a.L_em_numeric_z) > 0.0);
    REQUIRE(std::fabs(std::fabs(a.L_em_numeric_z) - a.L_em_closed_magnitude) <
            1e-3 * a.L_em_closed_magnitude);
  }
  SECTION("sign flips under omega -> -omega and under mu eps - 1 -> -(mu eps - 1)") {
    const auto plus = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, 0.02, 6.0, 1.0, 1.0)));
    const auto minus = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, -0.02, 6.0, 1.0, 1.0)));
    REQUIRE(plus.L_em_numeric_z != 0.0);
    REQUIRE(std::fabs(plus.L_em_numeric_z + minus.L_em_numeric_z) <
            1e-12 * std::fabs(plus.L_em_numeric_z));
    // mu eps < 1 flips the stored direction (small speeds)
    const auto thin = wwe::angular_momentum(wwe::solve(make_config(0.1, 0.2, 0.02, 0.5, 1.0, 1.0)));
    REQUIRE(thin.L_em_numeric_z * plus.L_em_numeric_z < 0.0);
  }
  SECTION("azimuthal integral of the transverse direction vanishes") {
    const double c_int = integrate([](double phi) { return std::cos(phi); }, 0.0, 2.0 * M_PI);
    const double s_int = integrate([](double phi) { return std::sin(phi); }, 0.0, 2.0 * M_PI);
    REQUIRE(std::fabs(c_int) < 1e-12);
    REQUIRE(std::fabs(s_int) < 1e-12);
  }
  SECTION("f samples expose the azimuthal Poynting-like profile") {
    const auto cfg = make_config(0.1, 0.2, 0.05, 6.0, 1.0, 1.0);
    const auto sol = wwe::solve(cfg);
    const auto a = wwe::angular_momentum(sol, 9);
    REQUIRE(a.f_samples.size() == 9);
    for (const auto& [r, f] : a.f_samples)
      REQUIRE(std::fabs(f + sol.calE(r) * sol.calB(r)) < 1e-14);
  }
}

TEST_CASE("residual report") {
  SECTION("solved configuration passes every check") {
    const auto cfg = make_config(0.2, 0.5, 0.3, 3.0, 2.0, 1.4);
    const auto rep = wwe::residual_report(wwe::solve(cfg), 1e-4, 12);
    REQUIRE(rep.pass());
    REQUIRE(rep.dF_max < rep.tolerance);
    REQUIRE(rep.dstarG_max < rep.tolerance);
    REQUIRE(rep.jump_r1 < rep.tolerance);
    REQUIRE(rep.jump_r2 < rep.tolerance);
  }
  SECTION("perturbed axial constant keeps the field equations but breaks the jump") {
    const auto cfg = make_config(0.2, 0.5, 0.3, 3.0, 2.0, 1.4);
    auto sol = wwe::solve(cfg);
    const double delta = 1e-3;
    sol.c2 += delta;
    const auto rep = wwe::residual_report(sol, 1e-4, 8);
    REQUIRE(rep.dF_max < rep.tolerance);
    REQUIRE(rep.dstarG_max < rep.tolerance);
    REQUIRE(rep.jump_r1 > 0.5 * delta);
    REQUIRE(rep.jump_r2 > 0.5 * delta);
    REQUIRE_FALSE(rep.pass());
  }
  SECTION("radial constant family still solves the field equations away from the rims") {
    const auto cfg = make_config(0.2, 0.5, 0.3, 3.0, 2.0, 1.4);
    auto sol = wwe::solve(cfg);
    sol.c1 = 0.05;
    const auto rep = wwe::residual_report(sol, 1e-4, 8);
    REQUIRE(rep.dF_max < rep.tolerance);
    REQUIRE(rep.dstarG_max < rep.tolerance);
    REQUIRE(rep.jump_r1 > 1e-3);
    REQUIRE(rep.jump_r2 > 1e-3);
  }
  SECTION("degenerate annulus is handled without hazards") {
    const auto cfg = make_config(0.2, 0.2, 0.1, 3.0, 2.0, 1.0);
    const auto sol = wwe::solve(cfg);
    REQUIRE(wwe::potential(sol).V_exact == 0.0);
    REQUIRE(wwe::angular_momentum(sol).L_em_numeric_z == 0.0);
  }
}

TEST_CASE("solved configuration cross-checks") {
  const auto cfg = make_config(0.2, 0.5, 0.3, 3.0, 2.0, 1.4);
  const auto sol = wwe::solve(cfg);
  const MetricAtPoint eta = MetricAtPoint::minkowski();

  SECTION("dual excitation has the expected tetrad components") {
    for (double r : {cfg.r1, 0.34, cfg.r2}) {
      const KVector starG = hodge(sol.excitation_tetrad(r), eta);
      KVector expect(2);
      expect[5] = -sol.K(r);  // (23) slot
      expect[2] = sol.L();    // (03) slot
      REQUIRE(rel_err(starG, expect) < 1e-14);
    }
  }

  SECTION("all four engineering jump residuals vanish at both rims") {
    for (double r : {cfg.r1, cfg.r2}) {
      const auto in = wwe::fields_at(sol, r);
      const KVector G_in = sol.excitation_tetrad(r);
      const KVector F_out = wwe::exterior_excitation_tetrad(cfg.B0);

      auto lab_split = [&](const KVector& F, const KVector& G) {
        const FieldSplit s = split_fields(F, G, FrameVelocity::lab(), eta);
        struct Out {
          Vec3 E, B, D, H;
        } o;
        o.E = engineering_vector(s.E);
        o.B = engineering_vector(s.B);
        o.D = engineering_vector(s.D);
        o.H = engineering_vector(s.H);
        return o;
      };
      const auto outside = lab_split(F_out, F_out);
      const auto inside = lab_split(in.F, G_in);

      const Vec3 n_vec = {1.0, 0.0, 0.0};                  // radial
      const Vec3 v = {0.0, cfg.omega * r, 0.0};            // rim velocity, azimuthal
      const auto res = engineering_jump_residuals(outside.E - inside.E, outside.B - inside.B,
                                                  outside.D - inside.D, outside.H - inside.H,
                                                  n_vec, v);
      REQUIRE(res.max_abs() < 1e-10);
    }
  }

  SECTION("excitation satisfies the chart divergence equation with no current") {
    ChartFieldSampler G_contra;
    G_contra.grade = 2;
    G_contra.metric = [](const Point4& p) { return MetricAtPoint::cylindrical(p[1]); };
    G_contra.field = [&sol](const Point4& p) {
      const double r = p[1];
      return raise_indices(tetrad_to_cyl_coords(sol.excitation_tetrad(r), r),
                           MetricAtPoint::cylindrical(r));
    };
    ChartFieldSampler zero_current;
    zero_current.grade = 1;
    zero_current.metric = G_contra.metric;
    zero_current.field = [](const Point4&) { return KVector(1); };
    const double h = 1e-4;
    for (double r : {0.25, 0.35, 0.45}) {
      const auto res = divergence_residual(G_contra, zero_current, {0.0, r, 1.0, 0.0}, h);
      for (double v : res) REQUIRE(std::fabs(v) < h * h);
    }
  }

  SECTION("bound current of the interior polarization respects the symmetry") {
    ChartFieldSampler pi;
    pi.grade = 2;
    pi.metric = [](const Point4& p) { return MetricAtPoint::cylindrical(p[1]); };
    pi.field = [&sol](const Point4& p) {
      const double r = p[1];
      return tetrad_to_cyl_coords(sol.field_tetrad(r) - sol.excitation_tetrad(r), r);
    };
    const double h = 1e-5;
    const double r = 0.3;
    const KVector J3 = bound_current(pi, {0.0, r, 0.7, 0.1}, h);

    // Stationary and axisymmetric: identical at shifted t, phi, z.
    for (const Point4& shifted : {Point4{2.0, r, 0.7, 0.1}, Point4{0.0, r, 2.9, 0.1},
                                  Point4{0.0, r, 0.7, -1.4}}) {
      REQUIRE(rel_err(bound_current(pi, shifted, h), J3) < 1e-9);
    }

    // Only the charge slot (r,phi,z) and the radial-axial current slot
    // (t,r,z) survive; the other two vanish.
    REQUIRE(std::fabs(J3[0]) < 1e-9);  // (t,r,phi)
    REQUIRE(std::fabs(J3[2]) < 1e-9);  // (t,phi,z)

    // Central-difference oracle for the two surviving components: the dual
    // of the polarization is -(E - K) r dphi^dz + (B - L) dt^dz, so the
    // bound 3-form carries d/dr[(E - K) r] in the charge slot and
    // d/dr[B - L] in the radial-axial slot.
    auto piE = [&](double rr) { return sol.calE(rr) - sol.K(rr); };
    auto piB = [&](double rr) { return sol.calB(rr) - sol.L(); };
    const double charge_expect = (piE(r + h) * (r + h) - piE(r - h) * (r - h)) / (2 * h);
    const double current_expect = (piB(r + h) - piB(r - h)) / (2 * h);
    REQUIRE(std::fabs(J3[3] - charge_expect) < 1e-6);  // (r,phi,z)
    REQUIRE(std::fabs(J3[1] - current_expect) < 1e-6); // (t,r,z)

    // Frame decomposition relative to the lab: spatial charge 3-form plus
    // time-wedged current 2-form in the (r,z) slot.
    const auto dec = frame_decompose_3form(J3, FrameVelocity::lab(),
                                           MetricAtPoint::cylindrical(r));
    REQUIRE(std::fabs(dec.charge[3] - J3[3]) < 1e-12);
    REQUIRE(std::fabs(dec.current[4] - J3[1]) < 1e-12);  // (1,3) slot
  }
}

TEST_CASE("parameter sweep") {
  const auto base = make_config(0.1, 0.2, 0.01, 6.0, 1.0, 1.0);
  SECTION("single step equals the direct solve") {
    const auto rows = wwe::sweep(base, wwe::SweepParam::omega, 0.01, 0.01, 1);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].ok);
    const auto p = wwe::potential(wwe::solve(base));
    REQUIRE(rows[0].V_exact == p.V_exact);
    REQUIRE(rows[0].V_small_omega == p.V_small_omega);
  }
  SECTION("voltage leading form is linear in omega") {
    const auto rows = wwe::sweep(base, wwe::SweepParam::omega, 0.0, 0.01, 6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(rows[i].ok);
      const double expect = rows[1].V_small_omega * static_cast<double>(i);
      REQUIRE(std::fabs(rows[i].V_small_omega - expect) < 1e-15);
    }
  }
  SECTION("voltage changes sign across mu eps = 1") {
    const auto rows = wwe::sweep(base, wwe::SweepParam::epsilon, 0.5, 1.5, 3);
    REQUIRE(rows[0].V_exact > 0.0);   // mu eps < 1
    REQUIRE(std::fabs(rows[1].V_exact) < 1e-15);
    REQUIRE(rows[2].V_exact < 0.0);   // mu eps > 1
  }
  SECTION("invalid points are marked and the sweep continues") {
    // omega r2 crosses 1 between the first and second point.
    const auto rows = wwe::sweep(base, wwe::SweepParam::omega, 4.0, 6.0, 3);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[0].ok);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE_FALSE(rows[i].ok);
      REQUIRE_FALSE(rows[i].error.empty());
    }
  }
}
