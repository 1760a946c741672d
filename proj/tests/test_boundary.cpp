#include <catch2/catch_amalgamated.hpp>

#include "form4/boundary.hpp"
#include "form4/random_inputs.hpp"
#include "form4/rotating.hpp"
#include "helpers.hpp"

using namespace form4;
using testutil::rel_err;

namespace {
const MetricAtPoint eta = MetricAtPoint::minkowski();

KVector two_form(int i, int j, double c) {
  int idx[2] = {i, j};
  KVector v(2);
  v[canon_position(2, idx)] = c;
  return v;
}
}  // namespace

TEST_CASE("field-strength jump residual") {
  const KVector n = KVector::basis(1, 1);  // theta^1
  SECTION("continuous field has zero residual") {
    RandomInputs rnd(301);
    const KVector F = rnd.kvector(2);
    REQUIRE(jump_residual_F(F, F, n).max_abs() == 0.0);
  }
  SECTION("cylinder fields sharing the radial factor satisfy the condition") {
    // Exterior B0 theta^1^theta^2 against an interior ansatz
    // E theta^0^theta^1 + B theta^1^theta^2: both terms wedge theta^1 away.
    const KVector F_out = two_form(1, 2, 0.8);
    const KVector F_in = two_form(0, 1, -0.4) + two_form(1, 2, 1.9);
    REQUIRE(jump_residual_F(F_out, F_in, n).max_abs() < 1e-15);
  }
  SECTION("constructed violation") {
    const KVector F_out = two_form(0, 2, 1e-3);
    const KVector res = jump_residual_F(F_out, KVector(2), n);
    // delta theta^0 ^ theta^2 ^ theta^1 = -delta theta^0 ^ theta^1 ^ theta^2
    KVector expect(3);
    expect[0] = -1e-3;
    REQUIRE(testutil::max_abs_diff(res, expect) < 1e-18);
  }
}

TEST_CASE("excitation jump residual") {
  const KVector n = KVector::basis(1, 1);
  SECTION("continuous excitation has zero residual") {
    RandomInputs rnd(302);
    const KVector G = rnd.kvector(2);
    REQUIRE(jump_residual_G(G, G, n, eta).max_abs() == 0.0);
  }
  SECTION("matched cylinder solution constants") {
    // Exterior B0 theta^12; interior K theta^01 + L theta^12 with K = 0,
    // L = B0 passes; the residual is linear in the mismatch of L.
    const double B0 = 1.3;
    const KVector G_out = two_form(1, 2, B0);
    REQUIRE(jump_residual_G(G_out, two_form(1, 2, B0), n, eta).max_abs() < 1e-12);
    const double delta = 1e-4;
    const KVector res = jump_residual_G(G_out, two_form(1, 2, B0 + delta), n, eta);
    REQUIRE(std::fabs(res.max_abs() - delta) < 1e-12);
    const KVector res2 = jump_residual_G(G_out, two_form(1, 2, B0 + 2 * delta), n, eta);
    REQUIRE(std::fabs(res2.max_abs() - 2 * delta) < 1e-12);
  }
}

TEST_CASE("duality equivalences between the jump residuals") {
  RandomInputs rnd(303);
  for (int c = 0; c < 400; ++c) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const KVector dG = rnd.kvector(2);
    const KVector n = rnd.kvector(1);
    // *(G |_ n) = (*G) ^ n
    const KVector lhs = hodge(contract_right(dG, n, m), m);
    const KVector rhs = wedge(hodge(dG, m), n);
    REQUIRE(rel_err(lhs, rhs) < 1e-10);
    // (*F) |_ n = -*(F ^ n): the two formulations vanish together.
    const KVector lhs2 = contract_right(hodge(dG, m), n, m);
    const KVector rhs2 = -1.0 * hodge(wedge(dG, n), m);
    REQUIRE(rel_err(lhs2, rhs2) < 1e-10);
  }
}

TEST_CASE("engineering jump residuals") {
  SECTION("zero jumps") {
    const auto r = engineering_jump_residuals({0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                              {1, 0, 0}, {0, 0.4, 0});
    REQUIRE(r.max_abs() == 0.0);
  }
  SECTION("static interface reduces to the classical conditions") {
    const Vec3 dE = {0.0, 0.7, -0.2};
    const auto r = engineering_jump_residuals(dE, {0, 0, 0}, {0, 0, 0}, {0, 0, 0},
                                              {1, 0, 0}, {0, 0, 0});
    REQUIRE((r.tangential_E - cross({1, 0, 0}, dE)).max_abs() == 0.0);
    REQUIRE(r.normal_B == 0.0);
  }
  SECTION("agrees with the form-language residuals for random jumps") {
    RandomInputs rnd(304);
    for (int c = 0; c < 400; ++c) {
      const Vec3 dE = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Vec3 dB = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Vec3 dD = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Vec3 dH = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Vec3 n_vec = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
      const Vec3 v = {rnd.uniform(-0.5, 0.5), rnd.uniform(-0.5, 0.5), rnd.uniform(-0.5, 0.5)};

      // Normal covector with the kinematic constraint built in:
      // n = (n_vec.v) dt - n_vec,i dx^i.
      KVector n(1);
      n[0] = dot(n_vec, v);
      n[1] = -n_vec.x;
      n[2] = -n_vec.y;
      n[3] = -n_vec.z;

      const KVector dF = field_2form_from_vectors(dE, dB);
      const KVector dGf = field_2form_from_vectors(dD, dH);
      const auto eng = engineering_jump_residuals(dE, dB, dD, dH, n_vec, v);

      // [F] ^ n: spatial-spatial-spatial slot carries n.[B], the mixed
      // slots carry n x [E] - (n.v)[B] componentwise.
      const KVector wf = jump_residual_F(dF, KVector(2), n);
      REQUIRE(std::fabs(wf[3] - eng.normal_B) < 1e-12);         // (123)
      REQUIRE(std::fabs(wf[2] - eng.tangential_E.x) < 1e-12);   // (023)
      REQUIRE(std::fabs(-wf[1] - eng.tangential_E.y) < 1e-12);  // (013)
      REQUIRE(std::fabs(wf[0] - eng.tangential_E.z) < 1e-12);   // (012)

      // [G] |_ n = -(n _| [G]): time slot is n.[D], spatial slots are
      // -((n.v)[D] + n x [H]).
      const KVector wg = jump_residual_G(dGf, KVector(2), n, eta);
      REQUIRE(std::fabs(wg[0] - eng.normal_D) < 1e-12);
      REQUIRE(std::fabs(-wg[1] - eng.tangential_H.x) < 1e-12);
      REQUIRE(std::fabs(-wg[2] - eng.tangential_H.y) < 1e-12);
      REQUIRE(std::fabs(-wg[3] - eng.tangential_H.z) < 1e-12);
    }
  }
}

TEST_CASE("boundary kinematics residual") {
  SECTION("rigidly rotating cylinder surface") {
    MovingBoundary b;
    const double r1 = 0.8, omega = 0.4;
    b.xi = [r1](double, const Vec3& p) { return std::hypot(p.x, p.y) - r1; };
    b.velocity = [omega](double, const Vec3& p) { return Vec3{-omega * p.y, omega * p.x, 0.0}; };
    const Vec3 p = {r1 * std::cos(0.7), r1 * std::sin(0.7), 0.3};
    REQUIRE(std::fabs(boundary_kinematics_residual(b, 1.2, p)) < 1e-9);
  }
  SECTION("uniformly expanding sphere") {
    MovingBoundary b;
    const double R0 = 1.0, u = 0.2;
    b.xi = [R0, u](double t, const Vec3& p) {
      return p.x * p.x + p.y * p.y + p.z * p.z - (R0 + u * t) * (R0 + u * t);
    };
    b.velocity = [u](double, const Vec3& p) {
      const double r = p.norm();
      return (u / r) * p;
    };
    const double t = 0.9, R = R0 + u * t;
    const Vec3 p = {R * 0.36, R * 0.48, R * 0.8};
    REQUIRE(std::fabs(boundary_kinematics_residual(b, t, p)) < 1e-8);
  }
  SECTION("mismatched velocity is detected") {
    MovingBoundary b;
    b.xi = [](double t, const Vec3& p) { return p.x - 0.5 * t; };
    b.velocity = [](double, const Vec3&) { return Vec3{0.1, 0.0, 0.0}; };
    const Vec3 p = {0.5 * 2.0, 0.4, -0.1};
    REQUIRE(std::fabs(boundary_kinematics_residual(b, 2.0, p)) > 0.3);
  }
  SECTION("off-boundary point rejected") {
    MovingBoundary b;
    b.xi = [](double, const Vec3& p) { return p.x; };
    b.velocity = [](double, const Vec3&) { return Vec3{}; };
    REQUIRE_THROWS_AS(boundary_kinematics_residual(b, 0.0, {0.5, 0, 0}), std::invalid_argument);
  }
}
