#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhb/big_uint.hpp"
#include "qhb/chart_atlas.hpp"
#include "qhb/complex_linalg.hpp"
#include "qhb/errors.hpp"
#include "qhb/fubini_study.hpp"
#include "qhb/line_bundle.hpp"
#include "qhb/picard_states.hpp"

// The Hilbert-space bundle over CP^n for Picard class l. Fibers are spanned
// by a vacuum section of the class-l line bundle plus excitations; for l = 1
// the basis is (vacuum, excitations by affine index) and the transitions are
// exactly block diag(t, J). For l > 1 the fiber is the n-th exterior power of
// the rank-(n+l) extension diag(J, I_l), twisted by the class-c(l) line
// bundle; its basis is the lexicographic StateLabel order of picard_states.

namespace qhb {

inline constexpr double kJunctionTol = 1e-10;

struct QHFiberState {
  ChartId chart;
  int picard = 1;
  CVec amplitudes;
};

struct TransitionMatrix {
  ChartId from_chart;
  ChartId to_chart;
  CMat matrix;
};

struct PathSegment {
  ChartId chart;
  std::vector<CVec> points;  // polyline of affine coordinates in this chart
};

struct PhaseSpacePath {
  std::vector<PathSegment> segments;

  bool empty() const { return segments.empty(); }
  int dim() const {
    if (segments.empty() || segments.front().points.empty()) return 0;
    return static_cast<int>(segments.front().points.front().size());
  }
};

struct HolonomyResult {
  CMat matrix;
  PhaseSpacePath loop;
};

inline std::uint64_t fiber_dimension(int n, int l) {
  if (n < 1) throw DomainError("fiber_dimension: need n >= 1");
  if (l >= 1) return binomial_u64(static_cast<std::uint64_t>(n + l), static_cast<std::uint64_t>(n));
  if (l == 0) return 1;
  if (l == -1) return static_cast<std::uint64_t>(n) + 1;
  throw UnsupportedPicardClass("fiber_dimension: class " + std::to_string(l) +
                               " has no fiber construction here (only l >= -1)");
}

// Line-bundle twist applied on top of the exterior-power block for l > 1.
// Kept in one place; everything downstream takes whatever this returns.
inline int twist_exponent(int l) { return l; }

namespace detail {

// Compound (n-th exterior power) matrix of big: entries are n x n minors,
// rows/cols in lexicographic subset order.
inline CMat compound_matrix(const CMat& big, const std::vector<StateLabel>& labels, int n) {
  const std::size_t d = labels.size();
  CMat out(d, d);
  CMat minor(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          minor(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              big(static_cast<std::size_t>(labels[r].subset[static_cast<std::size_t>(i)] - 1),
                  static_cast<std::size_t>(labels[c].subset[static_cast<std::size_t>(j)] - 1));
      out(r, c) = determinant(minor);
    }
  return out;
}

// Derivation (Leibniz) extension of big to the n-th exterior power: the
// connection acts on one wedge slot at a time.
inline CMat derivation_matrix(const CMat& big, const std::vector<StateLabel>& labels, int n) {
  const std::size_t d = labels.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[labels[i].subset] = i;
  CMat out(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    const std::vector<int>& t = labels[c].subset;
    for (int m = 0; m < n; ++m) {
      const int tm = t[static_cast<std::size_t>(m)];
      for (std::size_t b = 1; b <= big.rows; ++b) {
        const int bi = static_cast<int>(b);
        const Complex coeff = big(b - 1, static_cast<std::size_t>(tm - 1));
        if (coeff == Complex(0.0, 0.0)) continue;
        bool repeated = false;
        for (int q = 0; q < n; ++q)
          if (q != m && t[static_cast<std::size_t>(q)] == bi) repeated = true;
        if (repeated) continue;
        std::vector<int> replaced = t;
        replaced[static_cast<std::size_t>(m)] = bi;
        // parity of the sort permutation = parity of inversions
        int inversions = 0;
        for (std::size_t x = 0; x < replaced.size(); ++x)
          for (std::size_t y = x + 1; y < replaced.size(); ++y)
            if (replaced[x] > replaced[y]) ++inversions;
        std::vector<int> sorted = replaced;
        std::sort(sorted.begin(), sorted.end());
        const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
        out(index.at(sorted), c) += sign * coeff;
      }
    }
  }
  return out;
}

// diag(j, fill * I_extra): fill = 1 embeds transition/metric data, fill = 0
// embeds connection data (the extra directions are flat).
inline CMat embed_tangent_block(const CMat& j, int extra, double fill = 1.0) {
  const std::size_t n = j.rows;
  const std::size_t big_n = n + static_cast<std::size_t>(extra);
  CMat big(big_n, big_n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) big(r, c) = j(r, c);
  for (std::size_t r = n; r < big_n; ++r) big(r, r) = fill;
  return big;
}

inline void require_same_fiber(const QHFiberState& s1, const QHFiberState& s2,
                               const AffineCoords& a) {
  if (s1.chart != s2.chart || s1.chart != a.chart)
    throw ChartMismatch("fiber_inner_product: states and point must share one chart");
  if (s1.picard != s2.picard)
    throw ChartMismatch("fiber_inner_product: states carry different Picard classes");
  if (s1.amplitudes.size() != s2.amplitudes.size())
    throw ChartMismatch("fiber_inner_product: amplitude lengths differ");
}

}  // namespace detail

inline TransitionMatrix transition_matrix(const AffineCoords& a, ChartId j, int l) {
  const int n = a.dim();
  detail::require_chart_range(j, n, "transition_matrix");
  if (l == 0) {
    CMat m(1, 1);
    m(0, 0) = transition_factor(a, j, 0);  // also validates the overlap
    return TransitionMatrix{a.chart, j, std::move(m)};
  }
  if (l == 1 || l == -1) {
    const Complex t = transition_factor(a, j, 1);
    const CMat jac = (j == a.chart) ? CMat::identity(static_cast<std::size_t>(n))
                                    : jacobian(a, j);
    CMat m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    m(0, 0) = t;  // vacuum is index 0, excitations follow in affine order
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m(static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(c) + 1) =
            jac(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    if (l == -1) m = transpose(inverse(m));  // dual bundle
    return TransitionMatrix{a.chart, j, std::move(m)};
  }
  if (l < -1)
    throw UnsupportedPicardClass("transition_matrix: class " + std::to_string(l) +
                                 " not constructed (only l >= -1)");
  // l > 1
  const std::vector<StateLabel> labels = enumerate_states(n, l);
  const CMat jac = (j == a.chart) ? CMat::identity(static_cast<std::size_t>(n))
                                  : jacobian(a, j);
  const CMat big = detail::embed_tangent_block(jac, l);
  CMat m = detail::compound_matrix(big, labels, n);
  const Complex tw = transition_factor(a, j, twist_exponent(l));
  for (auto& x : m.data) x *= tw;
  return TransitionMatrix{a.chart, j, std::move(m)};
}

// Gram matrix of the fiber Hermitian form at a, in the basis above; the
// pairing is <s1, s2> = s2^H G s1. Tangent-type blocks carry g_{j ibar}
// (the transpose arrangement is what makes <v, w> = g_{i jbar} v^i wbar^j).
inline CMat fiber_gram(const AffineCoords& a, int l) {
  const int n = a.dim();
  if (l == 0) {
    CMat g(1, 1);
    g(0, 0) = 1.0;
    return g;
  }
  if (l == 1 || l == -1) {
    const CMat gt = transpose(metric(a).g);
    CMat g(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    g(0, 0) = fiber_metric(a, 1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        g(static_cast<std::size_t>(r) + 1, static_cast<std::size_t>(c) + 1) =
            gt(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    if (l == -1) return conjugate(inverse(g));  // dual pairing
    return g;
  }
  if (l < -1)
    throw UnsupportedPicardClass("fiber_gram: class " + std::to_string(l) + " not constructed");
  const std::vector<StateLabel> labels = enumerate_states(n, l);
  const CMat big = detail::embed_tangent_block(transpose(metric(a).g), l);
  CMat g = detail::compound_matrix(big, labels, n);
  const double h = fiber_metric(a, twist_exponent(l));
  for (auto& x : g.data) x *= h;
  return g;
}

inline Complex fiber_inner_product(const QHFiberState& s1, const QHFiberState& s2,
                                   const AffineCoords& a) {
  detail::require_same_fiber(s1, s2, a);
  const CMat g = fiber_gram(a, s1.picard);
  if (g.rows != s1.amplitudes.size())
    throw ChartMismatch("fiber_inner_product: amplitude length does not match fiber dimension");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t k = 0; k < g.cols; ++k)
      acc += std::conj(s2.amplitudes[i]) * g(i, k) * s1.amplitudes[k];
  return acc;
}

inline double fiber_norm(const QHFiberState& s, const AffineCoords& a) {
  return std::sqrt(std::max(0.0, fiber_inner_product(s, s, a).real()));
}

// Connection matrices Omega_j (one per holomorphic direction); parallel
// transport solves v' = -(Omega_j zdot^j) v. Each block is the Chern
// connection of the corresponding Gram block, so transport is an isometry.
inline std::vector<CMat> connection_matrices(const AffineCoords& a, int l) {
  const int n = a.dim();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<CMat> out;
  out.reserve(un);
  if (l == 0) {
    for (int j = 0; j < n; ++j) out.emplace_back(1, 1);
    return out;
  }
  if (l == 1 || l == -1) {
    const ChristoffelSymbols cs = christoffel(a);
    const CVec vac = chern_connection(a, 1);
    for (int j = 0; j < n; ++j) {
      CMat m(un + 1, un + 1);
      m(0, 0) = vac[static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          m(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(k) + 1) = cs.at(i, j, k);
      if (l == -1) m = Complex(-1.0, 0.0) * transpose(m);
      out.push_back(std::move(m));
    }
    return out;
  }
  if (l < -1)
    throw UnsupportedPicardClass("connection_matrices: class " + std::to_string(l) +
                                 " not constructed");
  const std::vector<StateLabel> labels = enumerate_states(n, l);
  const ChristoffelSymbols cs = christoffel(a);
  const CVec vac = chern_connection(a, twist_exponent(l));
  const std::size_t d = labels.size();
  for (int j = 0; j < n; ++j) {
    CMat gamma(un, un);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        gamma(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = cs.at(i, j, k);
    CMat m = detail::derivation_matrix(detail::embed_tangent_block(gamma, l, 0.0), labels, n);
    const Complex tw = vac[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < d; ++i) m(i, i) += tw;
    out.push_back(std::move(m));
  }
  return out;
}

inline void validate_path(const PhaseSpacePath& path) {
  if (path.empty()) return;
  const int n = path.dim();
  if (n < 1) throw PathDiscontinuous("path: empty segment or empty point");
  for (const auto& seg : path.segments) {
    if (seg.points.empty()) throw PathDiscontinuous("path: segment without points");
    for (const auto& p : seg.points) {
      if (static_cast<int>(p.size()) != n)
        throw PathDiscontinuous("path: inconsistent coordinate dimension");
      for (const auto& c : p)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
          throw PathDiscontinuous("path: non-finite coordinate");
    }
  }
  for (std::size_t s = 0; s + 1 < path.segments.size(); ++s) {
    const auto& cur = path.segments[s];
    const auto& nxt = path.segments[s + 1];
    const AffineCoords endpoint{cur.chart, cur.points.back()};
    const AffineCoords mapped = transition(endpoint, nxt.chart);
    double dist = 0.0;
    for (std::size_t i = 0; i < mapped.z.size(); ++i)
      dist = std::max(dist, std::abs(mapped.z[i] - nxt.points.front()[i]));
    if (dist > kJunctionTol)
      throw PathDiscontinuous("path: junction mismatch of " + std::to_string(dist) +
                              " between segments " + std::to_string(s) + " and " +
                              std::to_string(s + 1));
  }
}

namespace detail {

// v' = -(Omega_j zdot^j) v along the chord z(t) = p0 + t (p1 - p0), t in [0,1].
inline CMat transport_rhs(ChartId chart, int l, const CVec& p0, const CVec& delta, double t,
                          const CMat& state) {
  const std::size_t n = p0.size();
  CVec z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = p0[i] + t * delta[i];
  const std::vector<CMat> omega = connection_matrices(AffineCoords{chart, z}, l);
  CMat w(omega[0].rows, omega[0].cols);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex zd = delta[j];
    if (zd == Complex(0.0, 0.0)) continue;
    for (std::size_t e = 0; e < w.data.size(); ++e) w.data[e] += zd * omega[j].data[e];
  }
  CMat rhs = w * state;
  for (auto& x : rhs.data) x = -x;
  return rhs;
}

inline CMat transport_chord_rk4(ChartId chart, int l, const CVec& p0, const CVec& p1, CMat state,
                                int steps) {
  const std::size_t n = p0.size();
  CVec delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = p1[i] - p0[i];
  const double h = 1.0 / steps;
  for (int s = 0; s < steps; ++s) {
    const double t = s * h;
    const CMat k1 = transport_rhs(chart, l, p0, delta, t, state);
    const CMat k2 = transport_rhs(chart, l, p0, delta, t + 0.5 * h,
                                  state + Complex(0.5 * h, 0.0) * k1);
    const CMat k3 = transport_rhs(chart, l, p0, delta, t + 0.5 * h,
                                  state + Complex(0.5 * h, 0.0) * k2);
    const CMat k4 = transport_rhs(chart, l, p0, delta, t + h, state + Complex(h, 0.0) * k3);
    for (std::size_t e = 0; e < state.data.size(); ++e)
      state.data[e] += h / 6.0 * (k1.data[e] + 2.0 * k2.data[e] + 2.0 * k3.data[e] + k4.data[e]);
  }
  return state;
}

inline CMat transport_segment_fixed(const PathSegment& seg, int l, const CMat& state,
                                    int steps_per_chord) {
  CMat cur = state;
  for (std::size_t p = 0; p + 1 < seg.points.size(); ++p)
    cur = transport_chord_rk4(seg.chart, l, seg.points[p], seg.points[p + 1], std::move(cur),
                              steps_per_chord);
  return cur;
}

// Step halving per segment until two refinements agree to 1e-9.
inline CMat transport_segment(const PathSegment& seg, int l, const CMat& state) {
  constexpr double kTol = 1e-9;
  constexpr int kMaxStepsPerChord = 1 << 12;
  int steps = 4;
  CMat coarse = transport_segment_fixed(seg, l, state, steps);
  while (steps <= kMaxStepsPerChord) {
    const CMat fine = transport_segment_fixed(seg, l, state, 2 * steps);
    if (max_abs(fine - coarse) < kTol) return fine;
    coarse = fine;
    steps *= 2;
  }
  throw StepFailure("parallel_transport: step halving did not converge to 1e-9 on a segment");
}

}  // namespace detail

// Transport of a full frame along the path: the returned matrix maps fiber
// coordinates in the first segment's chart at the start point to coordinates
// in the last segment's chart at the end point. Transition matrices are
// applied exactly once per junction.
inline CMat transport_operator(const PhaseSpacePath& path, int n, int l) {
  const std::uint64_t d = fiber_dimension(n, l);
  CMat frame = CMat::identity(static_cast<std::size_t>(d));
  if (path.empty()) return frame;
  validate_path(path);
  if (path.dim() != n) throw DomainError("transport_operator: path dimension differs from n");
  for (std::size_t s = 0; s < path.segments.size(); ++s) {
    if (s > 0) {
      const auto& prev = path.segments[s - 1];
      const AffineCoords endpoint{prev.chart, prev.points.back()};
      frame = transition_matrix(endpoint, path.segments[s].chart, l).matrix * frame;
    }
    frame = detail::transport_segment(path.segments[s], l, frame);
  }
  return frame;
}

inline QHFiberState parallel_transport(const QHFiberState& s, const PhaseSpacePath& path) {
  if (path.empty()) return s;
  validate_path(path);
  if (s.chart != path.segments.front().chart)
    throw ChartMismatch("parallel_transport: state chart differs from path start chart");
  const int n = path.dim();
  if (fiber_dimension(n, s.picard) != s.amplitudes.size())
    throw DomainError("parallel_transport: amplitude length does not match fiber dimension");
  CMat col(s.amplitudes.size(), 1);
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) col(i, 0) = s.amplitudes[i];
  for (std::size_t seg = 0; seg < path.segments.size(); ++seg) {
    if (seg > 0) {
      const auto& prev = path.segments[seg - 1];
      const AffineCoords endpoint{prev.chart, prev.points.back()};
      col = transition_matrix(endpoint, path.segments[seg].chart, s.picard).matrix * col;
    }
    col = detail::transport_segment(path.segments[seg], s.picard, col);
  }
  QHFiberState out;
  out.chart = path.segments.back().chart;
  out.picard = s.picard;
  out.amplitudes.resize(col.rows);
  for (std::size_t i = 0; i < col.rows; ++i) out.amplitudes[i] = col(i, 0);
  return out;
}

inline PhaseSpacePath reversed_path(const PhaseSpacePath& path) {
  PhaseSpacePath out;
  out.segments.reserve(path.segments.size());
  for (auto it = path.segments.rbegin(); it != path.segments.rend(); ++it) {
    PathSegment seg;
    seg.chart = it->chart;
    seg.points.assign(it->points.rbegin(), it->points.rend());
    out.segments.push_back(std::move(seg));
  }
  return out;
}

inline HolonomyResult holonomy(const PhaseSpacePath& loop, int l) {
  if (loop.empty()) throw PathDiscontinuous("holonomy: empty loop");
  validate_path(loop);
  const auto& first = loop.segments.front();
  const auto& last = loop.segments.back();
  if (first.chart != last.chart)
    throw PathDiscontinuous(
        "holonomy: loop must close in its start chart (supply the closing transition "
        "explicitly)");
  double gap = 0.0;
  for (std::size_t i = 0; i < first.points.front().size(); ++i)
    gap = std::max(gap, std::abs(first.points.front()[i] - last.points.back()[i]));
  if (gap > kJunctionTol) throw PathDiscontinuous("holonomy: loop endpoints differ");
  HolonomyResult r;
  r.matrix = transport_operator(loop, loop.dim(), l);
  r.loop = loop;
  return r;
}

// max |H^dagger G H - G| against the Gram at the base point; zero for an
// exact isometry.
inline double unitarity_residual(const CMat& h, const CMat& gram) {
  return max_abs(adjoint(h) * gram * h - gram);
}

// Matrix expressing the transported basis of the fiber over p in the basis
// over q, both taken in their preferred charts. Different paths between the
// same endpoints generally disagree; that gap is the duality ambiguity.
inline CMat duality_map(const ProjectivePoint& p, const ProjectivePoint& q,
                        const PhaseSpacePath& path, int l) {
  const ChartId kp = preferred_chart(p);
  const ChartId kq = preferred_chart(q);
  const int n = p.dim();
  if (path.empty()) {
    if (p != q) throw PathDiscontinuous("duality_map: empty path but p != q");
    return CMat::identity(static_cast<std::size_t>(fiber_dimension(n, l)));
  }
  validate_path(path);
  const auto& first = path.segments.front();
  const auto& last = path.segments.back();
  if (to_projective(AffineCoords{first.chart, first.points.front()}) != p)
    throw PathDiscontinuous("duality_map: path does not start at p");
  if (to_projective(AffineCoords{last.chart, last.points.back()}) != q)
    throw PathDiscontinuous("duality_map: path does not end at q");
  CMat pre = (first.chart == kp)
                 ? CMat::identity(static_cast<std::size_t>(fiber_dimension(n, l)))
                 : transition_matrix(to_affine(p, kp), first.chart, l).matrix;
  CMat post = (last.chart == kq)
                  ? CMat::identity(static_cast<std::size_t>(fiber_dimension(n, l)))
                  : transition_matrix(AffineCoords{last.chart, last.points.back()}, kq, l).matrix;
  return post * transport_operator(path, n, l) * pre;
}

// Oriented symplectic area enclosed by the path, by the chartwise primitive
// lambda with d lambda = omega: integral of Im(dK . zdot) dt. Exact up to
// line quadrature for single-chart loops; an estimate across junctions.
inline double loop_area_estimate(const PhaseSpacePath& path) {
  static const double nodes[5] = {0.5 - 0.45308992296933193, 0.5 - 0.26923465505284155, 0.5,
                                  0.5 + 0.26923465505284155, 0.5 + 0.45308992296933193};
  static const double weights[5] = {0.5 * 0.23692688505618908, 0.5 * 0.47862867049936647,
                                    0.5 * 0.5688888888888889, 0.5 * 0.47862867049936647,
                                    0.5 * 0.23692688505618908};
  double area = 0.0;
  for (const auto& seg : path.segments) {
    for (std::size_t p = 0; p + 1 < seg.points.size(); ++p) {
      const CVec& a = seg.points[p];
      const CVec& b = seg.points[p + 1];
      for (int q = 0; q < 5; ++q) {
        CVec z(a.size());
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          z[i] = a[i] + nodes[q] * (b[i] - a[i]);
          s += std::norm(z[i]);
        }
        Complex dk_dot(0.0, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
          dk_dot += std::conj(z[i]) / (1.0 + s) * (b[i] - a[i]);
        area += weights[q] * dk_dot.imag();
      }
    }
  }
  return area;
}

// --- loop and path generators used by the CLI and the demos ---

// Counterclockwise square of the given side in the first coordinate plane,
// anchored at center (center is the first corner).
inline PhaseSpacePath square_loop(int n, const CVec& center, double side, ChartId chart = {1}) {
  if (static_cast<int>(center.size()) != n) throw DomainError("square_loop: center has wrong size");
  PathSegment seg;
  seg.chart = chart;
  auto corner = [&](Complex offset) {
    CVec p = center;
    p[0] += offset;
    return p;
  };
  seg.points = {corner({0.0, 0.0}),
                corner({side, 0.0}),
                corner({side, side}),
                corner({0.0, side}),
                corner({0.0, 0.0})};
  PhaseSpacePath path;
  path.segments.push_back(std::move(seg));
  return path;
}

// The |w| = 1 circle in chart 1 of CP^1, counterclockwise, as a closed
// polygon with enough chords that its enclosed area is within ~1e-5 of the
// true hemisphere.
inline PhaseSpacePath equator_loop(int chords = 2048) {
  PathSegment seg;
  seg.chart = ChartId{1};
  seg.points.reserve(static_cast<std::size_t>(chords) + 1);
  for (int m = 0; m <= chords; ++m) {
    const double th = 2.0 * M_PI * m / chords;
    seg.points.push_back({Complex(std::cos(th), std::sin(th))});
  }
  seg.points.back() = seg.points.front();  // close exactly
  PhaseSpacePath path;
  path.segments.push_back(std::move(seg));
  return path;
}

// Two meridian paths on CP^1 from (1,0) to (0,1): through w = +1 and through
// w = -1. Their duality maps differ by a nontrivial unitary.
inline std::pair<PhaseSpacePath, PhaseSpacePath> two_paths_demo() {
  auto make = [](double via) {
    PhaseSpacePath path;
    PathSegment first;
    first.chart = ChartId{1};
    first.points = {{Complex(0.0, 0.0)}, {Complex(via, 0.0)}};
    PathSegment second;
    second.chart = ChartId{2};
    second.points = {{Complex(1.0 / via, 0.0)}, {Complex(0.0, 0.0)}};
    path.segments = {std::move(first), std::move(second)};
    return path;
  };
  return {make(1.0), make(-1.0)};
}

}  // namespace qhb
