#pragma once

#include <array>
#include <functional>
#include <stdexcept>

#include "form4/operators.hpp"

// Chart-based numeric exterior calculus: central-difference partials of the
// canonical components, antisymmetrized over the new index.  Exact d of
// polynomial component fields is recovered to O(h^2).

namespace form4 {

// A field of fixed grade expressed in a chart's natural cobasis, together
// with the chart metric as a function of the point.  Samplers must be
// re-entrant; all evaluation here is pure.
struct ChartFieldSampler {
  int grade = 0;
  std::function<KVector(const Point4&)> field;
  std::function<MetricAtPoint(const Point4&)> metric;
};

namespace detail {

inline KVector sample_checked(const ChartFieldSampler& f, const Point4& x) {
  KVector v = f.field(x);
  if (v.grade != f.grade) throw std::runtime_error("sampler returned wrong grade");
  return v;
}

}  // namespace detail

// Numeric exterior derivative at a point, grade r -> r + 1.
inline KVector exterior_derivative(const ChartFieldSampler& f, const Point4& x, double h = 1e-4) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const int r = f.grade;
  if (r >= 4) return KVector::zero(4, KFlag::degree_overflow);

  // Central-difference samples in each chart direction.
  std::array<KVector, 4> plus, minus;
  for (int mu = 0; mu < 4; ++mu) {
    Point4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    plus[mu] = detail::sample_checked(f, xp);
    minus[mu] = detail::sample_checked(f, xm);
  }

  KVector out(r + 1);
  int rest[4];
  for (int k = 0; k < out.count(); ++k) {
    const int* K = kCanon[r + 1][k];
    double acc = 0.0;
    for (int t = 0; t <= r; ++t) {
      const int mu = K[t];
      int n = 0;
      for (int j = 0; j <= r; ++j)
        if (j != t) rest[n++] = K[j];
      const int pos = canon_position(r, rest);
      const double d = (plus[mu][pos] - minus[mu][pos]) / (2.0 * h);
      acc += (t % 2 == 0 ? 1.0 : -1.0) * d;
    }
    out[k] = acc;
  }
  return out;
}

// Residuals of the inhomogeneous Maxwell divergence form,
//   (1/sqrt|det g|) d_mu (sqrt|det g| F^{mu nu}) - J^nu,
// for a grade-2 sampler carrying contravariant components F^{mu nu} and a
// grade-1 sampler carrying J^nu.  Zero for any field satisfying the
// equation in that chart.
inline std::array<double, 4> divergence_residual(const ChartFieldSampler& field,
                                                 const ChartFieldSampler& current,
                                                 const Point4& x, double h = 1e-4) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (field.grade != 2 || current.grade != 1)
    throw std::invalid_argument("divergence_residual expects grades (2, 1)");

  auto weighted = [&](const Point4& p, int mu, int nu) {
    const MetricAtPoint m = field.metric(p);
    if (std::fabs(m.det_g) < 1e-300) throw std::runtime_error("degenerate metric");
    const KVector F = detail::sample_checked(field, p);
    // Full antisymmetric matrix entry from canonical storage.
    double val = 0.0;
    if (mu != nu) {
      int idx[2] = {mu < nu ? mu : nu, mu < nu ? nu : mu};
      val = F[canon_position(2, idx)];
      if (mu > nu) val = -val;
    }
    return m.sqrt_abs_det() * val;
  };

  const MetricAtPoint m0 = field.metric(x);
  const double w0 = m0.sqrt_abs_det();
  const KVector J = detail::sample_checked(current, x);

  std::array<double, 4> res{};
  for (int nu = 0; nu < 4; ++nu) {
    double div = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      if (mu == nu) continue;
      Point4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      div += (weighted(xp, mu, nu) - weighted(xm, mu, nu)) / (2.0 * h);
    }
    res[nu] = div / w0 - J[nu];
  }
  return res;
}

}  // namespace form4
