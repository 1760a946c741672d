#pragma once

#include <cmath>

#include "form4/kvector.hpp"

namespace testutil {

inline double max_abs_diff(const form4::KVector& a, const form4::KVector& b) {
  if (a.grade != b.grade) return 1e300;
  double m = 0.0;
  for (int k = 0; k < a.count(); ++k) m = std::fmax(m, std::fabs(a[k] - b[k]));
  return m;
}

// Scale-aware relative deviation between two k-vectors.
inline double rel_err(const form4::KVector& a, const form4::KVector& b) {
  const double scale = std::fmax(1.0, std::fmax(a.max_abs(), b.max_abs()));
  return max_abs_diff(a, b) / scale;
}

}  // namespace testutil
