#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "qhb/complex_linalg.hpp"
#include "qhb/errors.hpp"

// Charts on complex projective n-space. A point is an (n+1)-tuple of
// homogeneous coordinates Z^1..Z^{n+1}; chart U_k is the locus Z^k != 0 with
// holomorphic coordinates z^j = Z^j / Z^k, j != k, listed by increasing j.

namespace qhb {

// A chart stays usable while |Z^k| >= this bound on the normalized point;
// closer to the hyperplane at infinity the chart is treated as excluded.
inline constexpr double kChartMembershipTol = 1e-10;

// Componentwise tolerance for equality of normalized points.
inline constexpr double kPointEqualityTol = 1e-10;

struct ChartId {
  int k = 1;  // 1-based, valid range 1..n+1

  friend bool operator==(ChartId a, ChartId b) { return a.k == b.k; }
  friend bool operator!=(ChartId a, ChartId b) { return a.k != b.k; }
};

class ProjectivePoint {
public:
  // Normalizes on construction: the largest-modulus component becomes exactly
  // 1, ties broken by lowest index.
  explicit ProjectivePoint(CVec homogeneous) : z_(std::move(homogeneous)) {
    if (z_.size() < 2) throw DomainError("ProjectivePoint: need at least 2 components (n >= 1)");
    std::size_t best = 0;
    double best_mod = std::abs(z_[0]);
    for (std::size_t i = 1; i < z_.size(); ++i) {
      const double m = std::abs(z_[i]);
      if (m > best_mod) {
        best_mod = m;
        best = i;
      }
    }
    if (best_mod == 0.0 || !std::isfinite(best_mod))
      throw DomainError("ProjectivePoint: components must be finite and not all zero");
    const Complex pivot = z_[best];
    for (auto& c : z_) c /= pivot;
    z_[best] = Complex(1.0, 0.0);
  }

  int dim() const { return static_cast<int>(z_.size()) - 1; }  // n
  const CVec& homogeneous() const { return z_; }

  // Z^i, 1-based homogeneous index.
  Complex component(int i) const { return z_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.z_.size() != b.z_.size()) return false;
    for (std::size_t i = 0; i < a.z_.size(); ++i)
      if (std::abs(a.z_[i] - b.z_[i]) > kPointEqualityTol) return false;
    return true;
  }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

private:
  CVec z_;
};

struct AffineCoords {
  ChartId chart;
  CVec z;  // n entries, homogeneous indices j != chart.k in increasing j

  int dim() const { return static_cast<int>(z.size()); }

  // Slot of homogeneous index j (1-based, j != chart.k) in z.
  std::size_t slot(int j) const {
    return static_cast<std::size_t>(j < chart.k ? j - 1 : j - 2);
  }

  // Z^j / Z^k as a function of these coordinates (1 when j == chart.k).
  Complex homogeneous_ratio(int j) const {
    return j == chart.k ? Complex(1.0, 0.0) : z[slot(j)];
  }
};

namespace detail {
inline void require_chart_range(ChartId c, int n, const char* where) {
  if (c.k < 1 || c.k > n + 1)
    throw DomainError(std::string(where) + ": chart index out of range 1..n+1");
}
}  // namespace detail

inline ProjectivePoint to_projective(const AffineCoords& a) {
  const int n = a.dim();
  if (n < 1) throw DomainError("to_projective: need n >= 1");
  detail::require_chart_range(a.chart, n, "to_projective");
  CVec hom(static_cast<std::size_t>(n) + 1);
  std::size_t slot = 0;
  for (int j = 1; j <= n + 1; ++j) {
    if (j == a.chart.k)
      hom[static_cast<std::size_t>(j - 1)] = Complex(1.0, 0.0);
    else
      hom[static_cast<std::size_t>(j - 1)] = a.z[slot++];
  }
  return ProjectivePoint(std::move(hom));
}

inline bool chart_contains(const ProjectivePoint& p, ChartId k) {
  detail::require_chart_range(k, p.dim(), "chart_contains");
  return std::abs(p.component(k.k)) >= kChartMembershipTol;
}

inline AffineCoords to_affine(const ProjectivePoint& p, ChartId k) {
  detail::require_chart_range(k, p.dim(), "to_affine");
  if (!chart_contains(p, k))
    throw ChartExcluded("to_affine: |Z^" + std::to_string(k.k) +
                        "| below chart membership tolerance (point on the hyperplane at "
                        "infinity of chart " +
                        std::to_string(k.k) + ")");
  const Complex zk = p.component(k.k);
  AffineCoords a;
  a.chart = k;
  a.z.reserve(static_cast<std::size_t>(p.dim()));
  for (int j = 1; j <= p.dim() + 1; ++j) {
    if (j == k.k) continue;
    a.z.push_back(p.component(j) / zk);
  }
  return a;
}

inline ChartId preferred_chart(const ProjectivePoint& p) {
  // Normalization already put a literal 1 at the argmax slot (lowest index on
  // ties), so scan for it.
  const CVec& h = p.homogeneous();
  std::size_t best = 0;
  double best_mod = std::abs(h[0]);
  for (std::size_t i = 1; i < h.size(); ++i) {
    const double m = std::abs(h[i]);
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  return ChartId{static_cast<int>(best) + 1};
}

// Coordinates of the same point in chart j, by the direct rational formula
// z'_i = (Z^i/Z^k) / (Z^j/Z^k). Membership in the target chart is decided on
// the normalized point.
inline AffineCoords transition(const AffineCoords& a, ChartId j) {
  const int n = a.dim();
  detail::require_chart_range(j, n, "transition");
  if (j == a.chart) return a;
  if (!chart_contains(to_projective(a), j))
    throw ChartExcluded("transition: target chart " + std::to_string(j.k) +
                        " does not contain the point");
  const Complex t = a.homogeneous_ratio(j.k);
  AffineCoords out;
  out.chart = j;
  out.z.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n + 1; ++i) {
    if (i == j.k) continue;
    out.z.push_back(a.homogeneous_ratio(i) / t);
  }
  return out;
}

// Holomorphic Jacobian d z_(j) / d z_(k) at a, in closed form. Rows follow the
// target chart's slot order, columns the source chart's.
inline CMat jacobian(const AffineCoords& a, ChartId j) {
  const int n = a.dim();
  detail::require_chart_range(j, n, "jacobian");
  const std::size_t un = static_cast<std::size_t>(n);
  if (j == a.chart) return CMat::identity(un);
  if (!chart_contains(to_projective(a), j))
    throw ChartExcluded("jacobian: target chart " + std::to_string(j.k) +
                        " does not contain the point");
  const int k = a.chart.k;
  const Complex t = a.homogeneous_ratio(j.k);
  const Complex inv_t = Complex(1.0, 0.0) / t;
  const Complex inv_t2 = inv_t * inv_t;
  CMat m(un, un);
  std::size_t row = 0;
  for (int i = 1; i <= n + 1; ++i) {
    if (i == j.k) continue;
    std::size_t col = 0;
    for (int s = 1; s <= n + 1; ++s) {
      if (s == k) continue;
      Complex d(0.0, 0.0);
      if (i == k) {
        // target coordinate 1/t
        if (s == j.k) d = -inv_t2;
      } else {
        if (s == i) d += inv_t;
        if (s == j.k) d -= a.homogeneous_ratio(i) * inv_t2;
      }
      m(row, col) = d;
      ++col;
    }
    ++row;
  }
  return m;
}

}  // namespace qhb
