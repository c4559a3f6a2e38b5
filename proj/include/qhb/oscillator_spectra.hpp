#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhb/errors.hpp"

// Spectra of the linear and projective oscillators and the CP^n truncation to
// the vacuum plus n singly-excited states. hbar = 1, unit frequency; linear
// energies are kept exact (half-integers) until the final logarithm.

namespace qhb {

struct OccupationVector {
  std::vector<std::uint64_t> m;

  int modes() const { return static_cast<int>(m.size()); }

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.m == b.m;
  }
};

// E_lin = sum_j (m_j + 1/2); exact as a double for any realistic occupation.
inline double linear_energy(const OccupationVector& m) {
  std::uint64_t total = 0;
  for (const auto v : m.m) total += v;
  return (static_cast<double>(2 * total + m.m.size())) / 2.0;
}

// E_proj = log(1 + E_lin)
inline double projective_energy(const OccupationVector& m) {
  return std::log1p(linear_energy(m));
}

// The CP^n truncation: the vacuum plus the n unit vectors.
inline std::vector<OccupationVector> allowed_states(int n) {
  if (n < 1) throw DomainError("allowed_states: need n >= 1");
  std::vector<OccupationVector> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(OccupationVector{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)});
  for (int i = 0; i < n; ++i) {
    OccupationVector e{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    e.m[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

struct SpectrumRow {
  OccupationVector occupation;
  double linear_energy = 0.0;
  double projective_energy = 0.0;
  int degeneracy = 0;  // number of rows sharing this projective energy
};

struct SpectrumTable {
  std::vector<SpectrumRow> rows;  // sorted by projective energy ascending
};

namespace detail {
inline SpectrumTable tabulate(std::vector<OccupationVector> states) {
  SpectrumTable t;
  t.rows.reserve(states.size());
  for (auto& s : states) {
    SpectrumRow r;
    r.linear_energy = linear_energy(s);
    r.projective_energy = projective_energy(s);
    r.occupation = std::move(s);
    t.rows.push_back(std::move(r));
  }
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    return a.projective_energy < b.projective_energy;
  });
  for (auto& r : t.rows) {
    r.degeneracy = static_cast<int>(std::count_if(
        t.rows.begin(), t.rows.end(),
        [&](const SpectrumRow& o) { return o.projective_energy == r.projective_energy; }));
  }
  return t;
}
}  // namespace detail

inline SpectrumTable spectrum(int n) { return detail::tabulate(allowed_states(n)); }

// Comparison table without the CP^n truncation, up to a total occupation
// cutoff. Explicitly not the projective-oscillator spectrum on CP^n.
inline SpectrumTable unrestricted_spectrum(int n, std::uint64_t max_total_occupation) {
  if (n < 1) throw DomainError("unrestricted_spectrum: need n >= 1");
  // table size is binom(n + cutoff, n); refuse absurd requests
  double rough = 1.0;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(n); ++i)
    rough *= static_cast<double>(max_total_occupation + i) / static_cast<double>(i);
  if (rough > 2e5)
    throw DomainError("unrestricted_spectrum: comparison table would exceed 200000 rows");
  std::vector<OccupationVector> states;
  OccupationVector cur{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
  // depth-first enumeration of all m with sum(m) <= cutoff
  std::function<void(int, std::uint64_t)> rec = [&](int mode, std::uint64_t used) {
    if (mode == n) {
      states.push_back(cur);
      return;
    }
    for (std::uint64_t v = 0; v + used <= max_total_occupation; ++v) {
      cur.m[static_cast<std::size_t>(mode)] = v;
      rec(mode + 1, used + v);
    }
    cur.m[static_cast<std::size_t>(mode)] = 0;
  };
  rec(0, 0);
  return detail::tabulate(std::move(states));
}

struct VacuumGap {
  bool nondegenerate = false;
  double gap = 0.0;  // log(2 + n/2) - log(1 + n/2)
};

inline VacuumGap vacuum_is_nondegenerate(int n) {
  if (n < 1) throw DomainError("vacuum_is_nondegenerate: need n >= 1");
  // gap = log((n+4)/(n+2)), evaluated as log1p(2/(n+2)) so it stays positive
  // in floating point out to very large n
  const double gap = std::log1p(2.0 / (static_cast<double>(n) + 2.0));
  return VacuumGap{gap > 0.0, gap};
}

}  // namespace qhb
