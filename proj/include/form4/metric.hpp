#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace form4 {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Point4 = std::array<double, 4>;

inline Mat4 mat4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const double aik = a[i][k];
      if (aik == 0.0) continue;
      for (int j = 0; j < 4; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

inline Mat4 mat4_transpose(const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[j][i];
  return r;
}

inline std::array<double, 4> mat4_apply(const Mat4& a, const std::array<double, 4>& x) {
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a[i][j] * x[j];
  return r;
}

// Gauss-Jordan inverse with partial pivoting; also reports the determinant.
// Throws on (numerically) singular input.
inline Mat4 mat4_inverse(const Mat4& a, double* det_out = nullptr) {
  Mat4 m = a;
  Mat4 inv = mat4_identity();
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    if (std::fabs(m[pivot][col]) < 1e-300) throw std::runtime_error("degenerate metric");
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const double p = m[col][col];
    det *= p;
    for (int j = 0; j < 4; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      const double f = m[row][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 4; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  if (det_out) *det_out = det;
  return inv;
}

// Eigenvalues (and optionally eigenvectors as columns) of a symmetric 4x4
// matrix by cyclic Jacobi rotations.
inline std::array<double, 4> symmetric_eigenvalues(Mat4 a, Mat4* vectors = nullptr) {
  Mat4 v = mat4_identity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-28) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (vectors) *vectors = v;
  return {a[0][0], a[1][1], a[2][2], a[3][3]};
}

// Symmetric Lorentzian metric components at a point, signature (+,-,-,-),
// together with inverse, determinant and the orientation sign selecting the
// ordered-cobasis volume form.
struct MetricAtPoint {
  Mat4 g{};
  Mat4 g_inv{};
  double det_g = 0.0;
  int orientation = 1;

  static MetricAtPoint make(const Mat4& g, int orientation = 1) {
    if (orientation != 1 && orientation != -1)
      throw std::invalid_argument("orientation must be +1 or -1");
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::fabs(g[i][j] - g[j][i]) > 1e-12)
          throw std::invalid_argument("metric not symmetric");
    MetricAtPoint m;
    m.g = g;
    m.g_inv = mat4_inverse(g, &m.det_g);
    m.orientation = orientation;
    if (!(m.det_g < 0.0)) throw std::invalid_argument("metric determinant must be negative");
    const auto ev = symmetric_eigenvalues(g);
    int pos = 0, neg = 0;
    for (double e : ev) (e > 0.0 ? pos : neg) += 1;
    if (pos != 1 || neg != 3)
      throw std::invalid_argument("metric signature must be (+,-,-,-)");
    // g * g_inv = identity within 1e-10
    const Mat4 id = mat4_mul(m.g, m.g_inv);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (std::fabs(id[i][j] - (i == j ? 1.0 : 0.0)) > 1e-10)
          throw std::runtime_error("metric inverse check failed");
    return m;
  }

  static MetricAtPoint minkowski(int orientation = 1) {
    Mat4 eta{};
    eta[0][0] = 1.0;
    eta[1][1] = eta[2][2] = eta[3][3] = -1.0;
    return make(eta, orientation);
  }

  // Lab cylindrical chart (t, r, phi, z): diag(1, -1, -r^2, -1).
  static MetricAtPoint cylindrical(double r, int orientation = 1) {
    if (!(r > 0.0)) throw std::invalid_argument("cylindrical metric needs r > 0");
    Mat4 g{};
    g[0][0] = 1.0;
    g[1][1] = -1.0;
    g[2][2] = -r * r;
    g[3][3] = -1.0;
    return make(g, orientation);
  }

  double sqrt_abs_det() const { return std::sqrt(std::fabs(det_g)); }
  double sgn_det() const { return det_g < 0.0 ? -1.0 : 1.0; }
};

}  // namespace form4
