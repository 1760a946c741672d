#pragma once

#include <cmath>
#include <stdexcept>

#include "form4/kvector.hpp"
#include "form4/metric.hpp"

// Metric-dependent operators on canonical k-vector components.
//
// Conventions, fixed once and verified by the identity suite:
//  * contract_left extends the interior product by nesting on the left,
//    (a ^ b) _| C = a _| (b _| C); in components this is
//    (A _| B)_{K} = (-1)^{r(r-1)/2} (1/r!) A^{M} B_{MK}.
//    For a 1-form it is the plain metric interior product and obeys the
//    graded Leibniz rule a _| (A ^ B) = (a _| A) ^ B + (-1)^r A ^ (a _| B).
//  * contract_right(b, a) = (-1)^{s+1} contract_left(a, b) for 1-form a.
//  * hodge implements the component formula
//    *A_{K} = sqrt|det g| * A^{comp(K)} * eps(comp(K), K), equivalently
//    *A = reversion(A) _| volume_form.
//  * inner is the plain symmetric Gram pairing; on r-forms it equals the
//    Gram determinant of pairwise 1-form inner products.

namespace form4 {

namespace detail {

// Determinant of the r x r minor of g_inv with rows I and columns J.
inline double gram_minor(const Mat4& g_inv, const int* I, const int* J, int r) {
  switch (r) {
    case 0:
      return 1.0;
    case 1:
      return g_inv[I[0]][J[0]];
    case 2:
      return g_inv[I[0]][J[0]] * g_inv[I[1]][J[1]] -
             g_inv[I[0]][J[1]] * g_inv[I[1]][J[0]];
    case 3: {
      double d = 0.0;
      static constexpr int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      static constexpr double sgn[6] = {1, -1, -1, 1, 1, -1};
      for (int p = 0; p < 6; ++p)
        d += sgn[p] * g_inv[I[0]][J[perm[p][0]]] * g_inv[I[1]][J[perm[p][1]]] *
             g_inv[I[2]][J[perm[p][2]]];
      return d;
    }
    default: {
      Mat4 m = {};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) m[a][b] = g_inv[I[a]][J[b]];
      double det = 0.0;
      mat4_inverse(m, &det);
      return det;
    }
  }
}

}  // namespace detail

// Components with all indices raised by g_inv, in canonical order.
inline KVector raise_indices(const KVector& a, const MetricAtPoint& m) {
  const int r = a.grade;
  KVector up(r);
  for (int i = 0; i < a.count(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.count(); ++j) {
      if (a[j] == 0.0) continue;
      acc += detail::gram_minor(m.g_inv, kCanon[r][i], kCanon[r][j], r) * a[j];
    }
    up[i] = acc;
  }
  return up;
}

// Symmetric bilinear pairing of equal-grade k-vectors.
inline double inner(const KVector& a, const KVector& b, const MetricAtPoint& m) {
  if (a.grade != b.grade) throw std::invalid_argument("grade mismatch");
  const KVector up = raise_indices(a, m);
  double acc = 0.0;
  for (int k = 0; k < a.count(); ++k) acc += up[k] * b[k];
  return acc;
}

// Left contraction a _| b, lowering the grade of b by the grade of a.
// Total: r > s yields a zero scalar flagged grade_underflow.
inline KVector contract_left(const KVector& a, const KVector& b, const MetricAtPoint& m) {
  const int r = a.grade, s = b.grade;
  if (r > s) return KVector::zero(0, KFlag::grade_underflow);
  if (r == 0) return a[0] * b;
  const KVector up = raise_indices(a, m);
  const double sigma = reversion_sign(r);
  KVector out(s - r);
  int merged[4];
  for (int i = 0; i < up.count(); ++i) {
    if (up[i] == 0.0) continue;
    for (int k = 0; k < out.count(); ++k) {
      const int sign = merge_sign(kCanon[r][i], r, kCanon[s - r][k], s - r, merged);
      if (sign == 0) continue;
      out[k] += sigma * sign * up[i] * b[canon_position(s, merged)];
    }
  }
  return out;
}

// Right contraction by a 1-form: b |_ a = (-1)^{s+1} a _| b.
// Total: s = 0 yields a zero scalar flagged grade_underflow.
inline KVector contract_right(const KVector& b, const KVector& a, const MetricAtPoint& m) {
  if (a.grade != 1) throw std::invalid_argument("right contraction expects a 1-form");
  const int s = b.grade;
  if (s == 0) return KVector::zero(0, KFlag::grade_underflow);
  const double sign = (s % 2 == 0) ? -1.0 : 1.0;  // (-1)^{s+1}
  return sign * contract_left(a, b, m);
}

// Metrical volume form: orientation * sqrt|det g| theta^0^theta^1^theta^2^theta^3.
inline KVector volume_form(const MetricAtPoint& m) {
  KVector tau(4);
  tau[0] = m.orientation * m.sqrt_abs_det();
  return tau;
}

// Hodge star, grade r -> 4 - r.
inline KVector hodge(const KVector& a, const MetricAtPoint& m) {
  if (std::fabs(m.det_g) < 1e-300) throw std::runtime_error("degenerate metric");
  const int r = a.grade;
  const KVector up = raise_indices(a, m);
  const double w = m.orientation * m.sqrt_abs_det();
  KVector out(4 - r);
  int comp[4];
  for (int k = 0; k < out.count(); ++k) {
    complement(kCanon[4 - r][k], 4 - r, comp);
    const int pos = canon_position(r, comp);
    const int sign = permutation_sign(comp, r, kCanon[4 - r][k], 4 - r);
    out[k] = w * up[pos] * sign;
  }
  return out;
}

// Sign of the double star on grade r: ** = (-1)^{r(4-r)} sgn(det g).
inline double double_star_sign(int r, const MetricAtPoint& m) {
  const double parity = ((r * (4 - r)) % 2 == 0) ? 1.0 : -1.0;
  return parity * m.sgn_det();
}

// Inverse Hodge star: hodge(hodge_inverse(y)) = y.
inline KVector hodge_inverse(const KVector& y, const MetricAtPoint& m) {
  const int r = 4 - y.grade;
  return (1.0 / double_star_sign(r, m)) * hodge(y, m);
}

}  // namespace form4
