#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qhb/chart_atlas.hpp"
#include "qhb/complex_linalg.hpp"
#include "qhb/quadrature.hpp"

// Fubini-Study geometry in a chart: Kahler potential K = log(1 + |z|^2),
// metric g_{i jbar} = d^2 K / dz^i dzbar^j, the Kahler (= Chern = Levi-Civita)
// connection coefficients and curvature. All in closed form; finite
// differences only ever appear in the tests.

namespace qhb {

struct MetricTensor {
  CMat g;  // g(i, j) = g_{i jbar}
};

struct SymplecticForm {
  CMat w;  // coefficients of i * ddbar K in dz^i ^ dzbar^j
};

struct ChristoffelSymbols {
  int n = 0;
  std::vector<Complex> gamma;  // Gamma^i_{jk}, symmetric in j,k

  Complex& at(int i, int j, int k) {
    return gamma[static_cast<std::size_t>((i * n + j) * n + k)];
  }
  Complex at(int i, int j, int k) const {
    return gamma[static_cast<std::size_t>((i * n + j) * n + k)];
  }
};

struct CurvatureData {
  int n = 0;
  std::vector<Complex> riemann;  // R^i_{j k lbar} = -dbar_l Gamma^i_{jk}

  Complex& at(int i, int j, int k, int l) {
    return riemann[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }
  Complex at(int i, int j, int k, int l) const {
    return riemann[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }
};

inline double squared_radius(const AffineCoords& a) {
  double s = 0.0;
  for (const auto& c : a.z) s += std::norm(c);
  return s;
}

inline double kahler_potential(const AffineCoords& a) { return std::log1p(squared_radius(a)); }

// Leading Taylor term of the potential; an upper bound for it.
inline double quadratic_approximation(const AffineCoords& a) { return squared_radius(a); }

inline MetricTensor metric(const AffineCoords& a) {
  const std::size_t n = a.z.size();
  const double s = squared_radius(a);
  const double denom = (1.0 + s) * (1.0 + s);
  CMat g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = ((1.0 + s) - std::norm(a.z[i])) / denom;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = -std::conj(a.z[i]) * a.z[j] / denom;
      g(i, j) = v;
      g(j, i) = std::conj(v);  // exactly Hermitian by construction
    }
  }
  return MetricTensor{std::move(g)};
}

// Plain matrix inverse of metric(a): (1+|z|^2) (delta_ij + z^j zbar^i).
inline CMat inverse_metric(const AffineCoords& a) {
  const std::size_t n = a.z.size();
  const double s = squared_radius(a);
  CMat h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex v = a.z[j] * std::conj(a.z[i]);
      if (i == j) v += 1.0;
      h(i, j) = (1.0 + s) * v;
    }
  return h;
}

inline SymplecticForm symplectic_form(const AffineCoords& a) {
  return SymplecticForm{Complex(0.0, 1.0) * metric(a).g};
}

// Gamma^i_{jk} = g^{i lbar} d_j g_{k lbar} = -(delta_ik zbar^j + delta_ij zbar^k)/(1+|z|^2)
inline ChristoffelSymbols christoffel(const AffineCoords& a) {
  const int n = a.dim();
  ChristoffelSymbols cs;
  cs.n = n;
  cs.gamma.assign(static_cast<std::size_t>(n) * n * n, Complex(0.0, 0.0));
  const double denom = 1.0 + squared_radius(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex v(0.0, 0.0);
        if (i == k) v -= std::conj(a.z[static_cast<std::size_t>(j)]);
        if (i == j) v -= std::conj(a.z[static_cast<std::size_t>(k)]);
        cs.at(i, j, k) = v / denom;
      }
  return cs;
}

// R^i_{j k lbar} = -dbar_l Gamma^i_{jk}
inline CurvatureData curvature(const AffineCoords& a) {
  const int n = a.dim();
  CurvatureData cd;
  cd.n = n;
  cd.riemann.assign(static_cast<std::size_t>(n) * n * n * n, Complex(0.0, 0.0));
  const double s = squared_radius(a);
  const double d1 = 1.0 + s;
  const double d2 = d1 * d1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex v(0.0, 0.0);
          if (i == k && j == l) v += 1.0 / d1;
          if (i == j && k == l) v += 1.0 / d1;
          Complex w(0.0, 0.0);
          if (i == k) w += std::conj(a.z[static_cast<std::size_t>(j)]);
          if (i == j) w += std::conj(a.z[static_cast<std::size_t>(k)]);
          cd.at(i, j, k, l) = v - w * a.z[static_cast<std::size_t>(l)] / d2;
        }
  return cd;
}

// R_{i jbar k lbar} = g_{m jbar} R^m_{i k lbar}
inline Complex lowered_curvature(const CurvatureData& cd, const MetricTensor& g, int i, int j,
                                 int k, int l) {
  Complex v(0.0, 0.0);
  for (int m = 0; m < cd.n; ++m)
    v += g.g(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) * cd.at(m, i, k, l);
  return v;
}

// Gaussian curvature of CP^1 through the curvature tensor: 2 R^1_{1 1 1bar} / g.
inline double gaussian_curvature(const AffineCoords& a) {
  if (a.dim() != 1) throw DomainError("gaussian_curvature: defined for n = 1 only");
  const CurvatureData cd = curvature(a);
  const MetricTensor g = metric(a);
  return (2.0 * cd.at(0, 0, 0, 0) / g.g(0, 0)).real();
}

// Total symplectic area of CP^1 by quadrature over the two unit-disk chart
// pieces (the |w| = 1 circle splits CP^1 without touching either infinity).
inline double cp1_total_area(double tol = 1e-9) {
  double total = 0.0;
  for (int k = 1; k <= 2; ++k) {
    auto density = [k](double x, double y) {
      AffineCoords a{ChartId{k}, {Complex(x, y)}};
      // omega = i g dz ^ dzbar = 2 g dx ^ dy
      return 2.0 * metric(a).g(0, 0).real();
    };
    total += integrate_disk(density, 1.0, tol / 2.0);
  }
  return total;
}

}  // namespace qhb
