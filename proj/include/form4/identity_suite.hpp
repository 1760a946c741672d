#pragma once

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "form4/constitutive.hpp"
#include "form4/random_inputs.hpp"
#include "form4/rotating.hpp"

// Seeded property suite over the algebraic identities of the exterior
// operators and the media relations.  Deterministic for a fixed seed; used
// by the command-line checker and by the acceptance tests.

namespace form4 {

// Operator hooks so tests can inject a broken implementation and verify the
// suite localizes the violated identity.
struct AlgebraOps {
  std::function<KVector(const KVector&, const MetricAtPoint&)> star =
      [](const KVector& a, const MetricAtPoint& m) { return hodge(a, m); };
};

struct IdentityResult {
  std::string name;
  int cases = 0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string worst_case;  // serialized inputs of the worst draw

  std::string summary() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-45s cases=%-6d max_err=%.3e tol=%.1e  %s",
                  name.c_str(), cases, max_rel_err, tolerance, pass ? "pass" : "FAIL");
    return buf;
  }
};

struct IdentityReport {
  std::vector<IdentityResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

inline double rel_dev(const KVector& a, const KVector& b) {
  if (a.grade != b.grade) return 1e300;
  double diff = 0.0;
  for (int k = 0; k < a.count(); ++k) diff = std::fmax(diff, std::fabs(a[k] - b[k]));
  return diff / std::fmax(1.0, std::fmax(a.max_abs(), b.max_abs()));
}

inline void describe(std::ostringstream& os, const char* label, const KVector& v) {
  os << label << "=grade" << v.grade << "[";
  for (int k = 0; k < v.count(); ++k) os << (k ? "," : "") << v[k];
  os << "] ";
}

inline void describe(std::ostringstream& os, const char* label, const MetricAtPoint& m) {
  os << label << "=[";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) os << ((i || j) ? "," : "") << m.g[i][j];
  os << "] ";
}

struct Case {
  double err = 0.0;
  std::string description;
};

using CaseFn = std::function<Case(RandomInputs&, const AlgebraOps&)>;

inline IdentityResult run_one(const std::string& name, double tol, std::uint64_t seed, int cases,
                              const AlgebraOps& ops, const CaseFn& fn) {
  IdentityResult res;
  res.name = name;
  res.tolerance = tol;
  res.cases = cases;
  RandomInputs rnd(seed);
  for (int c = 0; c < cases; ++c) {
    Case k = fn(rnd, ops);
    if (k.err > res.max_rel_err) {
      res.max_rel_err = k.err;
      res.worst_case = std::move(k.description);
    }
  }
  res.pass = res.max_rel_err <= tol;
  return res;
}

}  // namespace detail

inline IdentityReport run_identity_suite(std::uint64_t seed, int cases,
                                         const AlgebraOps& ops = {}) {
  if (cases < 1) throw std::invalid_argument("cases must be >= 1");
  using detail::Case;
  using detail::describe;
  using detail::rel_dev;

  std::vector<std::pair<std::string, std::pair<double, detail::CaseFn>>> checks;

  checks.emplace_back("interior-product-graded-leibniz", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int r = rnd.uniform_int(0, 4);
    const int s = rnd.uniform_int(0, 4 - r);
    const KVector a = rnd.kvector(1), A = rnd.kvector(r), B = rnd.kvector(s);
    const KVector lhs = contract_left(a, wedge(A, B), m);
    KVector rhs(lhs.grade);
    if (r >= 1) rhs = rhs + wedge(contract_left(a, A, m), B);
    if (s >= 1) rhs = rhs + ((r % 2 == 0) ? 1.0 : -1.0) * wedge(A, contract_left(a, B, m));
    Case k;
    k.err = rel_dev(lhs, rhs);
    std::ostringstream os;
    describe(os, "a", a);
    describe(os, "A", A);
    describe(os, "B", B);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("wedge-star-exchange-equal-grades", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int r = rnd.uniform_int(0, 4);
    const KVector A = rnd.kvector(r), B = rnd.kvector(r);
    Case k;
    k.err = rel_dev(wedge(A, ops.star(B, m)), wedge(B, ops.star(A, m)));
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "B", B);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("scalar-star-exchange-complementary-grades", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int r = rnd.uniform_int(0, 4);
    const KVector A = rnd.kvector(r), B = rnd.kvector(4 - r);
    const double lhs = inner(reversion(A), ops.star(B, m), m);
    const double rhs = inner(reversion(B), ops.star(A, m), m);
    Case k;
    k.err = std::fabs(lhs - rhs) / std::fmax(1.0, std::fmax(std::fabs(lhs), std::fabs(rhs)));
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "B", B);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("wedge-star-to-contraction", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int s = rnd.uniform_int(0, 4);
    const int r = rnd.uniform_int(0, s);
    const KVector A = rnd.kvector(r), B = rnd.kvector(s);
    const double sign = ((r * (s - 1)) % 2 == 0) ? 1.0 : -1.0;
    const KVector lhs = wedge(A, ops.star(B, m));
    const KVector rhs = sign * ops.star(contract_left(reversion(A), B, m), m);
    Case k;
    k.err = rel_dev(lhs, rhs);
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "B", B);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("contraction-star-to-wedge", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int r = rnd.uniform_int(0, 4);
    const int s = rnd.uniform_int(0, 4 - r);
    const KVector A = rnd.kvector(r), B = rnd.kvector(s);
    const double sign = ((r * s) % 2 == 0) ? 1.0 : -1.0;
    const KVector lhs = contract_left(A, ops.star(B, m), m);
    const KVector rhs = sign * ops.star(wedge(reversion(A), B), m);
    Case k;
    k.err = rel_dev(lhs, rhs);
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "B", B);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("star-equals-reversed-contraction-of-volume", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const KVector A = rnd.kvector(rnd.uniform_int(0, 4));
    Case k;
    k.err = rel_dev(ops.star(A, m), contract_left(reversion(A), volume_form(m), m));
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("star-of-volume-and-unit", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const KVector one = KVector::scalar(1.0);
    const double e1 = rel_dev(ops.star(one, m), volume_form(m));
    const double e2 = rel_dev(ops.star(volume_form(m), m), KVector::scalar(m.sgn_det()));
    Case k;
    k.err = std::fmax(e1, e2);
    std::ostringstream os;
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("double-star-sign", std::make_pair(1e-10, [](RandomInputs& rnd, const AlgebraOps& ops) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const int r = rnd.uniform_int(0, 4);
    const KVector A = rnd.kvector(r);
    Case k;
    k.err = rel_dev(ops.star(ops.star(A, m), m), double_star_sign(r, m) * A);
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("wedge-graded-anticommutativity", std::make_pair(0.0, [](RandomInputs& rnd, const AlgebraOps&) {
    const int r = rnd.uniform_int(0, 4);
    const int s = rnd.uniform_int(0, 4 - r);
    const KVector A = rnd.kvector(r), B = rnd.kvector(s);
    const double sign = ((r * s) % 2 == 0) ? 1.0 : -1.0;
    Case k;
    k.err = rel_dev(wedge(A, B), sign * wedge(B, A));
    std::ostringstream os;
    describe(os, "A", A);
    describe(os, "B", B);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("constitutive-closed-form-vs-construction", std::make_pair(1e-12, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const FrameVelocity f = FrameVelocity::make(rnd.unit_frame(m), m);
    const MediumParams med{rnd.uniform(0.2, 8.0), rnd.uniform(0.2, 8.0)};
    const KVector F = rnd.kvector(2);
    Case k;
    k.err = rel_dev(constitutive_minkowski(F, f, med, m),
                    constitutive_minkowski_defining(F, f, med, m));
    std::ostringstream os;
    describe(os, "F", F);
    describe(os, "v", f.v);
    os << "eps=" << med.epsilon << " mu=" << med.mu << " ";
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("excitation-projections", std::make_pair(1e-11, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const FrameVelocity f = FrameVelocity::make(rnd.unit_frame(m), m);
    const MediumParams med{rnd.uniform(0.2, 8.0), rnd.uniform(0.2, 8.0)};
    const KVector F = rnd.kvector(2);
    const KVector G = constitutive_minkowski(F, f, med, m);
    const double e1 = rel_dev(contract_left(f.v, G, m), med.epsilon * contract_left(f.v, F, m));
    const double e2 = rel_dev(contract_left(f.v, hodge(G, m), m),
                              (1.0 / med.mu) * contract_left(f.v, hodge(F, m), m));
    Case k;
    k.err = std::fmax(e1, e2);
    std::ostringstream os;
    describe(os, "F", F);
    describe(os, "v", f.v);
    os << "eps=" << med.epsilon << " mu=" << med.mu << " ";
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("split-assemble-roundtrip", std::make_pair(1e-11, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const FrameVelocity f = FrameVelocity::make(rnd.unit_frame(m), m);
    auto spatialize = [&](KVector a) { return a - inner(a, f.v, m) * f.v; };
    const KVector a = spatialize(rnd.kvector(1)), b = spatialize(rnd.kvector(1));
    const KVector F = assemble_field(f, a, b, m);
    const FieldSplit s = split_fields(F, KVector(2), f, m);
    Case k;
    k.err = std::fmax(rel_dev(s.E, a), rel_dev(s.B, b));
    std::ostringstream os;
    describe(os, "a", a);
    describe(os, "b", b);
    describe(os, "v", f.v);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("vacuum-susceptibility-symmetries", std::make_pair(0.0, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const VacuumChi chi = vacuum_chi(m);
    double err = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            err = std::fmax(err, std::fabs(chi.c[r][s][mu][nu] + chi.c[s][r][mu][nu]));
            err = std::fmax(err, std::fabs(chi.c[r][s][mu][nu] + chi.c[r][s][nu][mu]));
            err = std::fmax(err, std::fabs(chi.c[r][s][mu][nu] - chi.c[s][r][nu][mu]));
          }
    Case k;
    k.err = err;
    std::ostringstream os;
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("vacuum-susceptibility-vs-index-raising", std::make_pair(1e-12, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const KVector F = rnd.kvector(2);
    Case k;
    k.err = rel_dev(apply_chi(vacuum_chi(m), F), raise_indices(F, m));
    std::ostringstream os;
    describe(os, "F", F);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("polarization-reconstruction", std::make_pair(1e-11, [](RandomInputs& rnd, const AlgebraOps&) {
    const MetricAtPoint m = rnd.lorentzian_metric();
    const FrameVelocity f = FrameVelocity::make(rnd.unit_frame(m), m);
    const KVector F = rnd.kvector(2), G = rnd.kvector(2);
    const auto p = polarization_split(F, G, f, m);
    Case k;
    k.err = rel_dev(wedge(f.v, p.P) - hodge(wedge(f.v, p.M), m), p.Pi);
    std::ostringstream os;
    describe(os, "F", F);
    describe(os, "G", G);
    describe(os, "v", f.v);
    describe(os, "g", m);
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("rotating-pullback-roundtrip", std::make_pair(1e-12, [](RandomInputs& rnd, const AlgebraOps&) {
    const KVector F = rnd.kvector(2);
    const double omega = rnd.uniform(-0.6, 0.6);
    const double xp = rnd.uniform(-1, 1), yp = rnd.uniform(-1, 1), t = rnd.uniform(-4, 4);
    Case k;
    if (std::fabs(omega) * std::hypot(xp, yp) >= 0.99) return k;
    const KVector back =
        transform_field_2form_inverse(transform_field_2form(F, omega, xp, yp, t), omega, xp, yp, t);
    k.err = rel_dev(back, F);
    std::ostringstream os;
    describe(os, "F", F);
    os << "omega=" << omega << " xp=" << xp << " yp=" << yp << " t=" << t;
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("rotating-pullback-vs-closed-forms", std::make_pair(1e-12, [](RandomInputs& rnd, const AlgebraOps&) {
    const Vec3 E = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
    const Vec3 B = {rnd.uniform(-1, 1), rnd.uniform(-1, 1), rnd.uniform(-1, 1)};
    const double omega = rnd.uniform(-0.6, 0.6);
    const double xp = rnd.uniform(-1, 1), yp = rnd.uniform(-1, 1), t = rnd.uniform(-4, 4);
    Case k;
    if (std::fabs(omega) * std::hypot(xp, yp) >= 0.99) return k;
    const KVector Fp = transform_field_2form(field_2form_from_vectors(E, B), omega, xp, yp, t);
    Vec3 Ep, Bp, Ec, Bc;
    vectors_from_field_2form(Fp, &Ep, &Bp);
    transform_field_closed_form(E, B, omega, xp, yp, t, &Ec, &Bc);
    k.err = std::fmax((Ep - Ec).max_abs(), (Bp - Bc).max_abs());
    std::ostringstream os;
    os << "E=(" << E.x << "," << E.y << "," << E.z << ") B=(" << B.x << "," << B.y << "," << B.z
       << ") omega=" << omega << " xp=" << xp << " yp=" << yp << " t=" << t;
    k.description = os.str();
    return k;
  }));

  checks.emplace_back("current-transform-vs-jacobian", std::make_pair(1e-12, [](RandomInputs& rnd, const AlgebraOps&) {
    const double rho = rnd.uniform(-2, 2);
    const Vec3 j = {rnd.uniform(-2, 2), rnd.uniform(-2, 2), rnd.uniform(-2, 2)};
    const double omega = rnd.uniform(-0.6, 0.6);
    const double xp = rnd.uniform(-1, 1), yp = rnd.uniform(-1, 1), t = rnd.uniform(-4, 4);
    const Mat4 Jinv = rotation_jacobian_inverse(omega, xp, yp, t);
    const auto rot = mat4_apply(Jinv, {rho, j.x, j.y, j.z});
    const auto out = transform_current(rho, j, omega, xp, yp, t);
    Case k;
    k.err = std::fmax(std::fabs(out.rho - rot[0]),
                      std::fmax(std::fabs(out.j.x - rot[1]),
                                std::fmax(std::fabs(out.j.y - rot[2]), std::fabs(out.j.z - rot[3]))));
    std::ostringstream os;
    os << "rho=" << rho << " j=(" << j.x << "," << j.y << "," << j.z << ") omega=" << omega
       << " xp=" << xp << " yp=" << yp << " t=" << t;
    k.description = os.str();
    return k;
  }));

  IdentityReport report;
  report.results.reserve(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    report.results.push_back(detail::run_one(checks[i].first, checks[i].second.first,
                                             seed * 1000003ULL + i, cases, ops,
                                             checks[i].second.second));
  }
  return report;
}

}  // namespace form4
