#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace form4 {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
};

namespace detail {

struct SimpsonState {
  const std::function<double(double)>& f;
  QuadratureOptions opts;
  double scale = 0.0;  // running magnitude estimate for the relative test
  int deepest = 0;

  double recurse(double a, double b, double fa, double fm, double fb, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = refined - whole;
    const double tol = std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(scale));
    if (std::fabs(err) <= 15.0 * tol || depth >= opts.max_depth) {
      if (depth >= opts.max_depth && std::fabs(err) > 15.0 * tol)
        throw std::runtime_error("quadrature did not converge: interval [" + std::to_string(a) +
                                 ", " + std::to_string(b) + "], error estimate " +
                                 std::to_string(std::fabs(err) / 15.0));
      deepest = std::max(deepest, depth);
      return refined + err / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, depth + 1) +
           recurse(m, b, fm, frm, fb, right, depth + 1);
  }
};

}  // namespace detail

// Adaptive Simpson quadrature; deterministic for a fixed integrand.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opts = {}) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::SimpsonState st{f, opts, std::fabs(whole), 0};
  return st.recurse(a, b, fa, fm, fb, whole, 0);
}

}  // namespace form4
