#pragma once

#include <cmath>
#include <functional>

#include "qhb/errors.hpp"

// Adaptive Simpson quadrature, plus the polar-coordinate disk integral used
// for areas and Chern numbers on CP^1. Integrands here are smooth, so the
// classic recursion converges quickly.

namespace qhb {

namespace detail {

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw QuadratureFailure("adaptive Simpson did not converge");
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline double integrate_1d(const std::function<double(double)>& f, double a, double b, double tol,
                           int max_depth = 40) {
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral of f(x, y) over the disk of given radius centered at the origin,
// in polar coordinates with nested adaptive passes.
inline double integrate_disk(const std::function<double(double, double)>& f, double radius,
                             double tol) {
  const double two_pi = 2.0 * M_PI;
  auto ring = [&](double r) {
    if (r == 0.0) return 0.0;
    auto along = [&](double theta) { return f(r * std::cos(theta), r * std::sin(theta)); };
    return r * integrate_1d(along, 0.0, two_pi, tol / (4.0 * radius));
  };
  return integrate_1d(ring, 0.0, radius, tol);
}

}  // namespace qhb
