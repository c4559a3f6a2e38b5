#pragma once

#include <cmath>
#include <string>

#include "qhb/chart_atlas.hpp"
#include "qhb/fubini_study.hpp"
#include "qhb/quadrature.hpp"

// The line bundles over CP^n indexed by the Picard class l: transition
// factors (Z^k/Z^j)^l, the invariant fiber metric (1+|z|^2)^{-l}, its Chern
// connection and curvature, and the curvature integral over CP^1 that
// recovers l. Direction conventions are fixed so chern_number(l) = +l.

namespace qhb {

struct LineBundle {
  int l = 0;  // Picard class; 0 trivial, -1 tautological
};

struct SectionValue {
  ChartId chart;
  Complex value;
};

inline Complex integer_power(Complex base, int e) {
  if (e < 0) return Complex(1.0, 0.0) / integer_power(base, -e);
  Complex r(1.0, 0.0);
  Complex b = base;
  int k = e;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Factor multiplying a local section when passing from a's chart k to chart
// j: (Z^k / Z^j)^l. Sections of class l scale like degree-l polynomials in Z.
inline Complex transition_factor(const AffineCoords& a, ChartId j, int l) {
  const int n = a.dim();
  detail::require_chart_range(j, n, "transition_factor");
  if (j == a.chart) return Complex(1.0, 0.0);
  const ProjectivePoint p = to_projective(a);
  if (!chart_contains(p, a.chart) || !chart_contains(p, j))
    throw ChartExcluded("transition_factor: point not in the chart overlap");
  return integer_power(Complex(1.0, 0.0) / a.homogeneous_ratio(j.k), l);
}

// Re-trivialize a local section value in chart j.
inline SectionValue transform_section(const SectionValue& s, const AffineCoords& a, ChartId j,
                                      int l) {
  if (s.chart != a.chart)
    throw ChartMismatch("transform_section: section and point live in different charts");
  return SectionValue{j, transition_factor(a, j, l) * s.value};
}

// h_l = (1 + |z|^2)^{-l}; the U(n+1)-invariant Hermitian structure.
inline double fiber_metric(const AffineCoords& a, int l) {
  return std::pow(1.0 + squared_radius(a), -static_cast<double>(l));
}

// A_i = d_i log h_l = -l zbar^i / (1 + |z|^2)
inline CVec chern_connection(const AffineCoords& a, int l) {
  const std::size_t n = a.z.size();
  const double denom = 1.0 + squared_radius(a);
  CVec out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = -static_cast<double>(l) * std::conj(a.z[i]) / denom;
  return out;
}

// F_{i jbar} = dbar_j d_i log h_l = -l g_{i jbar}
inline CMat curvature_form(const AffineCoords& a, int l) {
  return Complex(-static_cast<double>(l), 0.0) * metric(a).g;
}

// (i / 2 pi) integral of the curvature over CP^1, oriented so the result is
// the Picard class. Quadrature over the two unit-disk chart pieces.
inline double chern_number(int l, double tol = 1e-9) {
  double total = 0.0;
  for (int k = 1; k <= 2; ++k) {
    auto density = [k, l](double x, double y) {
      AffineCoords a{ChartId{k}, {Complex(x, y)}};
      // (i/2pi) F_{1 1bar} dzbar ^ dz = -(1/pi) F_{1 1bar} dx ^ dy
      return -curvature_form(a, l)(0, 0).real() / M_PI;
    };
    total += integrate_disk(density, 1.0, tol / 2.0);
  }
  return total;
}

}  // namespace qhb
