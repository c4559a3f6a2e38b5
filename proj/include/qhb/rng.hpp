#pragma once

#include <cmath>
#include <cstdint>

#include "qhb/chart_atlas.hpp"
#include "qhb/complex_linalg.hpp"

// Deterministic sample generator (splitmix64 core) so checks and tests
// produce identical streams on every platform and run.

namespace qhb {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double th = uniform(0.0, 2.0 * M_PI);
    return Complex(r * std::cos(th), r * std::sin(th));
  }

  // Affine coordinates in the given chart with |z| <= radius.
  AffineCoords affine_point(int n, double radius, ChartId chart = {1}) {
    CVec z(static_cast<std::size_t>(n));
    for (auto& c : z) c = complex_in_disk(radius / std::sqrt(static_cast<double>(n)));
    return AffineCoords{chart, std::move(z)};
  }

  // A point whose normalized homogeneous components all stay well away from
  // zero, so that every chart (and in particular any triple overlap) is
  // usable.
  ProjectivePoint overlap_point(int n) {
    CVec hom(static_cast<std::size_t>(n) + 1);
    for (auto& c : hom) {
      const double mod = uniform(0.4, 1.0);
      const double th = uniform(0.0, 2.0 * M_PI);
      c = Complex(mod * std::cos(th), mod * std::sin(th));
    }
    return ProjectivePoint(std::move(hom));
  }

private:
  std::uint64_t state_;
};

}  // namespace qhb
