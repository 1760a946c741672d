#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "form4/multi_index.hpp"

namespace form4 {

// Marker carried by results of total operations whose natural output grade
// would leave 0..4 (kept instead of throwing: the value is a correct zero).
enum class KFlag : std::uint8_t { none = 0, degree_overflow, grade_underflow };

// Grade-r antisymmetric covariant tensor at a point, stored as C(4,r)
// canonical components (strictly increasing multi-indices, lexicographic).
struct KVector {
  int grade = 0;
  KFlag flag = KFlag::none;
  std::array<double, 6> comp{};

  KVector() = default;

  explicit KVector(int g) : grade(g) {
    if (g < 0 || g > 4) throw std::invalid_argument("grade must be in 0..4");
  }

  static KVector scalar(double x) {
    KVector v(0);
    v.comp[0] = x;
    return v;
  }

  // Basis r-form for the canonical tuple at position k.
  static KVector basis(int g, int k) {
    KVector v(g);
    v.comp[static_cast<std::size_t>(k)] = 1.0;
    return v;
  }

  static KVector zero(int g, KFlag f = KFlag::none) {
    KVector v(g);
    v.flag = f;
    return v;
  }

  int count() const { return kGradeCount[static_cast<std::size_t>(grade)]; }

  double& operator[](int k) { return comp[static_cast<std::size_t>(k)]; }
  double operator[](int k) const { return comp[static_cast<std::size_t>(k)]; }

  double max_abs() const {
    double m = 0.0;
    for (int k = 0; k < count(); ++k) m = std::fmax(m, std::fabs(comp[static_cast<std::size_t>(k)]));
    return m;
  }
};

inline KVector operator+(const KVector& a, const KVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("grade mismatch");
  KVector r(a.grade);
  for (int k = 0; k < r.count(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline KVector operator-(const KVector& a, const KVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("grade mismatch");
  KVector r(a.grade);
  for (int k = 0; k < r.count(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline KVector operator*(double s, const KVector& a) {
  KVector r(a.grade);
  for (int k = 0; k < r.count(); ++k) r[k] = s * a[k];
  return r;
}

inline KVector operator*(const KVector& a, double s) { return s * a; }

inline KVector operator-(const KVector& a) { return -1.0 * a; }

// Exterior product.  Bilinear, associative, graded-anticommutative with
// a ^ b = (-1)^{rs} b ^ a holding bitwise: for every output component the
// contributions are accumulated over unordered index splittings in an order
// invariant under swapping the arguments.  Total: if r + s > 4 the zero
// 4-form is returned carrying a degree_overflow marker.
inline KVector wedge(const KVector& a, const KVector& b) {
  const int r = a.grade, s = b.grade;
  if (r + s > 4) return KVector::zero(4, KFlag::degree_overflow);
  if (r == 0) {
    KVector out(s);
    for (int k = 0; k < out.count(); ++k) out[k] = a[0] * b[k];
    return out;
  }
  if (s == 0) {
    KVector out(r);
    for (int k = 0; k < out.count(); ++k) out[k] = a[k] * b[0];
    return out;
  }
  const int n = r + s;
  const int m = r < s ? r : s;
  const bool swapped = r > s;
  KVector out(n);
  for (int k = 0; k < out.count(); ++k) {
    const int* K = kCanon[n][k];
    double acc = 0.0;
    // Enumerate splittings of K into a size-m part P and its rest Q.  The
    // enumeration depends only on K, never on the argument order.
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
      if (r == s && !(mask & 1)) continue;  // each unordered split once
      int P[4], Q[4];
      int np = 0, nq = 0;
      for (int t = 0; t < n; ++t) {
        if ((mask >> t) & 1) P[np++] = K[t];
        else Q[nq++] = K[t];
      }
      const int pos_p = canon_position(m, P);
      const int pos_q = canon_position(n - m, Q);
      int scratch[4];
      const int s_pq = merge_sign(P, m, Q, n - m, scratch);
      const int s_qp = merge_sign(Q, n - m, P, m, scratch);
      if (r == s) {
        acc += s_pq * a[pos_p] * b[pos_q] + s_qp * a[pos_q] * b[pos_p];
      } else if (!swapped) {
        acc += s_pq * a[pos_p] * b[pos_q];
      } else {
        acc += s_qp * a[pos_q] * b[pos_p];
      }
    }
    out[k] = acc;
  }
  return out;
}

// Grade-dependent factor-order reversal: (-1)^{r(r-1)/2} A.
inline KVector reversion(const KVector& a) {
  KVector r = reversion_sign(a.grade) * a;
  r.flag = a.flag;
  return r;
}

}  // namespace form4
