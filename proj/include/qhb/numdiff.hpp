#pragma once

#include <functional>

#include "qhb/complex_linalg.hpp"

// Central-difference Wirtinger derivatives. These exist purely as oracles for
// the closed-form geometry: the implementation never calls them.

namespace qhb {
namespace numdiff {

using ScalarField = std::function<Complex(const CVec&)>;
using RealField = std::function<double(const CVec&)>;

inline CVec shifted(const CVec& z, std::size_t m, Complex dz) {
  CVec out = z;
  out[m] += dz;
  return out;
}

// d/dz^m = (d/dx - i d/dy)/2
inline Complex d(const ScalarField& f, const CVec& z, std::size_t m, double h = 1e-6) {
  const Complex fx = (f(shifted(z, m, {h, 0.0})) - f(shifted(z, m, {-h, 0.0}))) / (2.0 * h);
  const Complex fy = (f(shifted(z, m, {0.0, h})) - f(shifted(z, m, {0.0, -h}))) / (2.0 * h);
  return 0.5 * (fx - Complex(0.0, 1.0) * fy);
}

// d/dzbar^m = (d/dx + i d/dy)/2
inline Complex dbar(const ScalarField& f, const CVec& z, std::size_t m, double h = 1e-6) {
  const Complex fx = (f(shifted(z, m, {h, 0.0})) - f(shifted(z, m, {-h, 0.0}))) / (2.0 * h);
  const Complex fy = (f(shifted(z, m, {0.0, h})) - f(shifted(z, m, {0.0, -h}))) / (2.0 * h);
  return 0.5 * (fx + Complex(0.0, 1.0) * fy);
}

namespace detail {

// mixed second partial d^2 f / du dv for distinct real directions
inline double mixed2(const RealField& f, const CVec& z, std::size_t mu, Complex du,
                     std::size_t mv, Complex dv) {
  const auto at = [&](double su, double sv) {
    CVec p = z;
    p[mu] += su * du;
    p[mv] += sv * dv;
    return f(p);
  };
  return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * std::abs(du) * std::abs(dv));
}

inline double second(const RealField& f, const CVec& z, std::size_t m, Complex dz) {
  const auto at = [&](double s) {
    CVec p = z;
    p[m] += s * dz;
    return f(p);
  };
  return (at(1.0) - 2.0 * at(0.0) + at(-1.0)) / (std::abs(dz) * std::abs(dz));
}

}  // namespace detail

// d^2 f / dz^i dzbar^j of a real scalar field:
// (f_{x_i x_j} + f_{y_i y_j} + i (f_{x_i y_j} - f_{y_i x_j})) / 4
inline Complex hermitian_hessian(const RealField& f, const CVec& z, std::size_t i, std::size_t j,
                                 double h = 3e-4) {
  const Complex ex(h, 0.0);
  const Complex ey(0.0, h);
  double fxx, fyy, fxy, fyx;
  if (i == j) {
    fxx = detail::second(f, z, i, ex);
    fyy = detail::second(f, z, i, ey);
    fxy = detail::mixed2(f, z, i, ex, j, ey);
    fyx = fxy;
  } else {
    fxx = detail::mixed2(f, z, i, ex, j, ex);
    fyy = detail::mixed2(f, z, i, ey, j, ey);
    fxy = detail::mixed2(f, z, i, ex, j, ey);
    fyx = detail::mixed2(f, z, i, ey, j, ex);
  }
  return 0.25 * Complex(fxx + fyy, fxy - fyx);
}

}  // namespace numdiff
}  // namespace qhb
