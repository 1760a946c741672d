#pragma once

#include <cmath>
#include <random>

#include "form4/operators.hpp"

// Seeded deterministic generators for property checks: random k-vectors,
// random Lorentzian metrics (eta conjugated by a well-conditioned matrix, so
// the signature is preserved and tolerances stay meaningful) and random unit
// timelike frames.

namespace form4 {

class RandomInputs {
 public:
  explicit RandomInputs(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  KVector kvector(int grade) {
    KVector v(grade);
    for (int k = 0; k < v.count(); ++k) v[k] = uniform(-1.0, 1.0);
    return v;
  }

  // g = L^T eta L with L = Q1 * diag(d) * Q2^T, d in [0.6, 1.8], so the
  // conjugating matrix has condition number <= 3.
  MetricAtPoint lorentzian_metric() {
    const Mat4 q1 = random_orthogonal();
    const Mat4 q2 = random_orthogonal();
    Mat4 d{};
    for (int i = 0; i < 4; ++i) d[i][i] = uniform(0.6, 1.8);
    const Mat4 L = mat4_mul(mat4_mul(q1, d), mat4_transpose(q2));
    Mat4 eta{};
    eta[0][0] = 1.0;
    eta[1][1] = eta[2][2] = eta[3][3] = -1.0;
    const Mat4 g = mat4_mul(mat4_transpose(L), mat4_mul(eta, L));
    Mat4 gs;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) gs[i][j] = 0.5 * (g[i][j] + g[j][i]);
    return MetricAtPoint::make(gs);
  }

  // Unit timelike 1-form v = g(U, .)/|U| for a random timelike vector U,
  // drawn by jittering around the metric's timelike eigendirection.
  KVector unit_frame(const MetricAtPoint& m) {
    Mat4 vecs;
    const auto ev = symmetric_eigenvalues(m.g, &vecs);
    int tdir = 0;
    for (int i = 0; i < 4; ++i)
      if (ev[i] > 0.0) tdir = i;
    for (int attempt = 0; attempt < 256; ++attempt) {
      std::array<double, 4> u;
      for (int i = 0; i < 4; ++i) u[i] = vecs[i][tdir] + uniform(-0.15, 0.15);
      double n = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) n += m.g[i][j] * u[i] * u[j];
      if (n < 0.05) continue;
      const double inv = 1.0 / std::sqrt(n);
      KVector v(1);
      for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += m.g[i][j] * u[j];
        v[i] = acc * inv;
      }
      if (v[0] == 0.0) continue;
      if (v[0] < 0.0) v = -1.0 * v;  // orient toward the future cone
      return v;
    }
    throw std::runtime_error("failed to draw a timelike frame");
  }

 private:
  Mat4 random_orthogonal() {
    for (int attempt = 0; attempt < 256; ++attempt) {
      Mat4 a;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = uniform(-1.0, 1.0);
      // Gram-Schmidt on columns.
      Mat4 q{};
      bool ok = true;
      for (int c = 0; c < 4 && ok; ++c) {
        std::array<double, 4> v = {a[0][c], a[1][c], a[2][c], a[3][c]};
        for (int p = 0; p < c; ++p) {
          double dot = 0.0;
          for (int i = 0; i < 4; ++i) dot += q[i][p] * v[i];
          for (int i = 0; i < 4; ++i) v[i] -= dot * q[i][p];
        }
        double nrm = 0.0;
        for (int i = 0; i < 4; ++i) nrm += v[i] * v[i];
        nrm = std::sqrt(nrm);
        if (nrm < 1e-3) { ok = false; break; }
        for (int i = 0; i < 4; ++i) q[i][c] = v[i] / nrm;
      }
      if (ok) return q;
    }
    throw std::runtime_error("failed to draw an orthogonal matrix");
  }

  std::mt19937_64 rng_;
};

}  // namespace form4
