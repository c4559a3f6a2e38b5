#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhb/big_uint.hpp"
#include "qhb/errors.hpp"

// Counting and labeling of Picard-class-l state spaces: a class-l state on
// CP^n is an n-fold excitation of the class-1 vacuum on CP^{n+l}, labeled by
// which n of the n+l creation operators act. Lexicographic label order is the
// basis order shared with the bundle transition matrices.

namespace qhb {

struct StateLabel {
  std::vector<int> subset;  // sorted ascending, n distinct elements of 1..n+l

  friend bool operator==(const StateLabel& a, const StateLabel& b) {
    return a.subset == b.subset;
  }
};

struct RepresentationInfo {
  int n = 0;
  int l = 0;
  BigUint dimension;  // binom(n+l, n); single column of n boxes, group rank n+l
};

namespace detail {
inline void require_state_domain(int n, int l, const char* where) {
  if (n < 1 || l < 1)
    throw DomainError(std::string(where) + ": need n >= 1 and l >= 1");
}
}  // namespace detail

inline BigUint state_count(int n, int l) {
  detail::require_state_domain(n, l, "state_count");
  return binomial_exact(static_cast<std::uint64_t>(n + l), static_cast<std::uint64_t>(n));
}

// All n-subsets of {1..n+l} in lexicographic order.
inline std::vector<StateLabel> enumerate_states(int n, int l) {
  detail::require_state_domain(n, l, "enumerate_states");
  std::vector<StateLabel> out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  const int top = n + l;
  while (true) {
    out.push_back(StateLabel{cur});
    // advance to the next combination
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == top - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Dimension of the single-column-n representation of the rank-(n+l) unitary
// group by the hook-content product: prod_i (N + 1 - i) / (n - i + 1), N=n+l.
// Independent of the binomial route used by state_count.
inline BigUint young_dimension(int n, int l) {
  detail::require_state_domain(n, l, "young_dimension");
  const int rank = n + l;
  BigUint numerator(1);
  for (int i = 1; i <= n; ++i)
    numerator.mul_small(static_cast<std::uint32_t>(rank + 1 - i));
  for (int i = 1; i <= n; ++i)
    numerator.div_small_exact(static_cast<std::uint32_t>(n - i + 1));
  return numerator;
}

inline RepresentationInfo representation_info(int n, int l) {
  return RepresentationInfo{n, l, young_dimension(n, l)};
}

struct VacuumDegeneracyReport {
  int n = 0;
  int l = 0;
  bool degenerate = false;
  // Number of excitation labels on CP^{n+l} realizing class-l states; the
  // class-l vacuum is one of them, and for l > 1 it is not singled out.
  BigUint realizing_labels;
};

inline VacuumDegeneracyReport vacuum_degeneracy_note(int n, int l) {
  if (l < 0) throw DomainError("vacuum_degeneracy_note: need l >= 0");
  VacuumDegeneracyReport r;
  r.n = n;
  r.l = l;
  if (l == 0) {
    r.degenerate = false;
    r.realizing_labels = BigUint(1);  // trivial bundle, single state
    return r;
  }
  r.degenerate = l > 1;
  r.realizing_labels = state_count(n, l);
  return r;
}

}  // namespace qhb
