#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qhb/chart_atlas.hpp"
#include "qhb/classical_flow.hpp"
#include "qhb/fubini_study.hpp"
#include "qhb/line_bundle.hpp"
#include "qhb/numdiff.hpp"
#include "qhb/oscillator_spectra.hpp"
#include "qhb/picard_states.hpp"
#include "qhb/qh_bundle.hpp"
#include "qhb/rng.hpp"

// Invariant suites behind the CLI --check flag: each entry reports the
// measured residual next to the bound it has to meet. Bounds are the module
// contracts, not calibrated afterwards.

namespace qhb {
namespace checks {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool larger_is_better = false;  // for witnesses that must exceed the bound
  bool pass = false;
};

struct CheckReport {
  std::string module;
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

namespace detail {

inline void add(CheckReport& rep, const std::string& name, double residual, double bound) {
  rep.results.push_back({name, residual, bound, false, residual <= bound});
}

inline void add_witness(CheckReport& rep, const std::string& name, double value, double bound) {
  rep.results.push_back({name, value, bound, true, value > bound});
}

}  // namespace detail

inline CheckReport run_atlas_checks(std::uint64_t seed = 1) {
  CheckReport rep{"chart_atlas", {}};
  Rng rng(seed);
  double round_trip = 0.0, inverse_res = 0.0, cocycle_coord = 0.0, cocycle_jac = 0.0,
         cr_res = 0.0, chain_res = 0.0, norm_idem = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int rep_i = 0; rep_i < 40; ++rep_i) {
      const ProjectivePoint p = rng.overlap_point(n);
      const ChartId i{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      ChartId k{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const AffineCoords a = to_affine(p, i);
      // round trip through homogeneous coordinates
      const ProjectivePoint back = to_projective(a);
      for (std::size_t c = 0; c < back.homogeneous().size(); ++c)
        round_trip = std::max(round_trip,
                              std::abs(back.homogeneous()[c] - p.homogeneous()[c]));
      // inverse transition
      const AffineCoords there = transition(a, j);
      const AffineCoords and_back = transition(there, i);
      for (std::size_t c = 0; c < a.z.size(); ++c)
        inverse_res = std::max(inverse_res, std::abs(and_back.z[c] - a.z[c]) /
                                                std::max(1.0, std::abs(a.z[c])));
      // coordinate and jacobian cocycle around i -> j -> k -> i
      const AffineCoords aj = transition(a, j);
      const AffineCoords ak = transition(aj, k);
      const AffineCoords ai = transition(ak, i);
      for (std::size_t c = 0; c < a.z.size(); ++c)
        cocycle_coord = std::max(cocycle_coord, std::abs(ai.z[c] - a.z[c]) /
                                                    std::max(1.0, std::abs(a.z[c])));
      const CMat prod = jacobian(ak, i) * jacobian(aj, k) * jacobian(a, j);
      cocycle_jac = std::max(cocycle_jac, max_abs(prod - CMat::identity(prod.rows)));
      // chain rule
      const CMat chained = jacobian(aj, k) * jacobian(a, j);
      chain_res = std::max(chain_res, max_abs(chained - jacobian(a, k)));
      // holomorphy of the transition map against Wirtinger differences
      const CMat jac = jacobian(a, j);
      for (std::size_t row = 0; row < jac.rows; ++row)
        for (std::size_t col = 0; col < jac.cols; ++col) {
          auto component = [&](const CVec& z) -> Complex {
            return transition(AffineCoords{a.chart, z}, j).z[row];
          };
          cr_res = std::max(cr_res, std::abs(numdiff::d(component, a.z, col) - jac(row, col)));
          cr_res = std::max(cr_res, std::abs(numdiff::dbar(component, a.z, col)));
        }
      // normalization idempotence
      const ProjectivePoint renorm(p.homogeneous());
      for (std::size_t c = 0; c < renorm.homogeneous().size(); ++c)
        norm_idem = std::max(norm_idem,
                             std::abs(renorm.homogeneous()[c] - p.homogeneous()[c]));
    }
  }
  detail::add(rep, "projective round-trip", round_trip, 1e-12);
  detail::add(rep, "transition inverse", inverse_res, 1e-12);
  detail::add(rep, "coordinate cocycle i->j->k->i", cocycle_coord, 1e-12);
  detail::add(rep, "jacobian cocycle product", cocycle_jac, 1e-10);
  detail::add(rep, "jacobian chain rule", chain_res, 1e-10);
  detail::add(rep, "Cauchy-Riemann residual of jacobian", cr_res, 1e-8);
  detail::add(rep, "normalization idempotent", norm_idem, 0.0);
  return rep;
}

inline CheckReport run_metric_checks(std::uint64_t seed = 2) {
  CheckReport rep{"fubini_study", {}};
  Rng rng(seed);
  double hess_res = 0.0, herm_res = 0.0, inv_res = 0.0, chris_res = 0.0, curv_res = 0.0,
         cov_res = 0.0, gamma_sym = 0.0, bound_res = 0.0, sympl_res = 0.0;
  bool pd_ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (int rep_i = 0; rep_i < 12; ++rep_i) {
      const AffineCoords a = rng.affine_point(n, 1.5);
      const std::size_t un = a.z.size();
      const MetricTensor g = metric(a);
      auto potential = [&](const CVec& z) { return kahler_potential(AffineCoords{a.chart, z}); };
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
          hess_res = std::max(
              hess_res, std::abs(numdiff::hermitian_hessian(potential, a.z, i, j) - g.g(i, j)));
      herm_res = std::max(herm_res, max_abs(g.g - adjoint(g.g)));
      pd_ok = pd_ok && is_positive_definite(g.g);
      inv_res = std::max(inv_res,
                         max_abs(inverse_metric(a) * g.g - CMat::identity(un)));
      // Christoffel against Gamma^i_{jk} = g^{i lbar} d_j g_{k lbar} with the
      // derivative taken by finite differences
      const ChristoffelSymbols cs = christoffel(a);
      const CMat ginv = inverse_metric(a);
      const int ni = static_cast<int>(un);
      for (int i = 0; i < ni; ++i)
        for (int j = 0; j < ni; ++j)
          for (int k = 0; k < ni; ++k) {
            Complex acc(0.0, 0.0);
            for (int el = 0; el < ni; ++el) {
              auto g_kl = [&](const CVec& z) {
                return metric(AffineCoords{a.chart, z}).g(static_cast<std::size_t>(k),
                                                          static_cast<std::size_t>(el));
              };
              // g^{i lbar} is the (el, i) entry of the plain inverse
              acc += ginv(static_cast<std::size_t>(el), static_cast<std::size_t>(i)) *
                     numdiff::d(g_kl, a.z, static_cast<std::size_t>(j));
            }
            chris_res = std::max(chris_res, std::abs(acc - cs.at(i, j, k)));
            gamma_sym = std::max(gamma_sym, std::abs(cs.at(i, j, k) - cs.at(i, k, j)));
          }
      // curvature against -dbar of Gamma
      const CurvatureData cd = curvature(a);
      for (int i = 0; i < ni; ++i)
        for (int j = 0; j < ni; ++j)
          for (int k = 0; k < ni; ++k)
            for (int el = 0; el < ni; ++el) {
              auto gamma_ijk = [&](const CVec& z) {
                return christoffel(AffineCoords{a.chart, z}).at(i, j, k);
              };
              const Complex fd = -numdiff::dbar(gamma_ijk, a.z, static_cast<std::size_t>(el));
              curv_res = std::max(curv_res, std::abs(fd - cd.at(i, j, k, el)));
            }
      // chart covariance: J^T g' conj(J) = g
      const ChartId target{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const ProjectivePoint p = to_projective(a);
      if (target != a.chart && chart_contains(p, target)) {
        const AffineCoords b = transition(a, target);
        const CMat jac = jacobian(a, target);
        const CMat pulled = transpose(jac) * metric(b).g * conjugate(jac);
        cov_res = std::max(cov_res, max_abs(pulled - g.g));
      }
      // potential bounds
      const double kp = kahler_potential(a);
      const double quad = quadratic_approximation(a);
      bound_res = std::max(bound_res, std::max(0.0, kp - quad));
      if (kp < 0.0) bound_res = std::max(bound_res, -kp);
      // symplectic form = i g
      sympl_res = std::max(sympl_res,
                           max_abs(symplectic_form(a).w - Complex(0.0, 1.0) * g.g));
    }
  }
  const double gauss_err = std::abs(
      gaussian_curvature(AffineCoords{ChartId{1}, {Complex(0.37, -0.22)}}) - 4.0);
  const double area_err = std::abs(cp1_total_area() - 2.0 * M_PI);
  double nonflat = 0.0;
  {
    const AffineCoords origin{ChartId{1}, CVec(2, Complex(0.0, 0.0))};
    const CurvatureData cd = curvature(origin);
    for (const auto& x : cd.riemann) nonflat = std::max(nonflat, std::abs(x));
  }
  detail::add(rep, "metric = ddbar K (Wirtinger differences)", hess_res, 1e-7);
  detail::add(rep, "metric Hermitian", herm_res, 1e-12);
  detail::add(rep, "metric positive definite", pd_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "inverse metric", inv_res, 1e-10);
  detail::add(rep, "christoffel vs finite differences", chris_res, 1e-6);
  detail::add(rep, "Gamma symmetric in lower indices", gamma_sym, 0.0);
  detail::add(rep, "curvature vs finite differences", curv_res, 1e-5);
  detail::add(rep, "metric chart covariance", cov_res, 1e-8);
  detail::add(rep, "0 <= K <= |z|^2", bound_res, 0.0);
  detail::add(rep, "symplectic form = i g", sympl_res, 0.0);
  detail::add(rep, "CP^1 Gaussian curvature = 4", gauss_err, 1e-6);
  detail::add(rep, "CP^1 symplectic area = 2pi", area_err, 1e-6);
  detail::add_witness(rep, "curvature max-norm at origin (nonflatness)", nonflat, 0.5);
  return rep;
}

inline CheckReport run_chern_checks(std::uint64_t seed = 3) {
  CheckReport rep{"line_bundle", {}};
  Rng rng(seed);
  double chern_res = 0.0;
  for (int l = -2; l <= 2; ++l)
    chern_res = std::max(chern_res, std::abs(chern_number(l) - static_cast<double>(l)));
  double cocycle_res = 0.0, mult_res = 0.0, compat_res = 0.0, conn_res = 0.0, curv_form_res = 0.0,
         form_cov_res = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int rep_i = 0; rep_i < 25; ++rep_i) {
      const ProjectivePoint p = rng.overlap_point(n);
      const ChartId i{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const ChartId k{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const int l = -2 + static_cast<int>(rng.next_u64() % 5);
      const AffineCoords ai = to_affine(p, i);
      const AffineCoords aj = to_affine(p, j);
      const AffineCoords ak = to_affine(p, k);
      cocycle_res = std::max(cocycle_res,
                             std::abs(transition_factor(ai, j, l) * transition_factor(aj, k, l) *
                                          transition_factor(ak, i, l) -
                                      1.0));
      const int l1 = -2 + static_cast<int>(rng.next_u64() % 5);
      mult_res = std::max(mult_res,
                          std::abs(transition_factor(ai, j, l + l1) -
                                   transition_factor(ai, j, l) * transition_factor(ai, j, l1)));
      // invariance of h |s|^2 for a section set to 1 in chart i
      const Complex sj = transition_factor(ai, j, l);
      compat_res = std::max(compat_res, std::abs(fiber_metric(aj, l) * std::norm(sj) -
                                                 fiber_metric(ai, l)));
      // connection vs finite differences of log h
      auto log_h = [&](const CVec& z) -> Complex {
        return std::log(fiber_metric(AffineCoords{ai.chart, z}, l));
      };
      const CVec conn = chern_connection(ai, l);
      for (std::size_t m = 0; m < conn.size(); ++m)
        conn_res = std::max(conn_res, std::abs(numdiff::d(log_h, ai.z, m) - conn[m]));
      // curvature form = -l g, and chart covariance as a (0,2) form
      curv_form_res = std::max(curv_form_res,
                               max_abs(curvature_form(ai, l) -
                                       Complex(-static_cast<double>(l), 0.0) * metric(ai).g));
      if (j != i) {
        const CMat jac = jacobian(ai, j);
        const CMat pulled = transpose(jac) * curvature_form(to_affine(p, j), l) * conjugate(jac);
        form_cov_res = std::max(form_cov_res, max_abs(pulled - curvature_form(ai, l)));
      }
    }
  }
  // transport of a unit section around the equator: the phase argument must
  // be -l times the enclosed symplectic area (mod 2pi)
  double phase_res = 0.0;
  {
    const PhaseSpacePath loop = equator_loop();
    const double area = cp1_total_area() / 2.0;  // hemisphere enclosed by |w| = 1
    for (int l = 1; l <= 2; ++l) {
      Complex line_integral(0.0, 0.0);
      const auto& pts = loop.segments.front().points;
      for (std::size_t c = 0; c + 1 < pts.size(); ++c) {
        // 5-point Gauss-Legendre along the chord of A_j zdot^j
        static const double xs[5] = {0.046910077030668074, 0.23076534494715845, 0.5,
                                     0.76923465505284155, 0.95308992296933193};
        static const double ws[5] = {0.11846344252809454, 0.23931433524968324,
                                     0.28444444444444444, 0.23931433524968324,
                                     0.11846344252809454};
        for (int q = 0; q < 5; ++q) {
          CVec z(1);
          z[0] = pts[c][0] + xs[q] * (pts[c + 1][0] - pts[c][0]);
          const CVec conn = chern_connection(AffineCoords{ChartId{1}, z}, l);
          line_integral += ws[q] * conn[0] * (pts[c + 1][0] - pts[c][0]);
        }
      }
      const Complex phase = std::exp(-line_integral);
      const Complex expected = std::exp(Complex(0.0, -static_cast<double>(l) * area));
      phase_res = std::max(phase_res, std::abs(phase - expected));
    }
  }
  detail::add(rep, "chern_number(l) = l for l in -2..2", chern_res, 1e-6);
  detail::add(rep, "transition factor cocycle", cocycle_res, 1e-10);
  detail::add(rep, "transition factor multiplicative in l", mult_res, 1e-10);
  detail::add(rep, "h |s|^2 chart invariant", compat_res, 1e-10);
  detail::add(rep, "chern connection vs finite differences", conn_res, 1e-7);
  detail::add(rep, "curvature form = -l g", curv_form_res, 0.0);
  detail::add(rep, "curvature form chart covariant", form_cov_res, 1e-8);
  detail::add(rep, "equator transport phase = -l x enclosed area", phase_res, 1e-4);
  return rep;
}

inline CheckReport run_spectrum_checks() {
  CheckReport rep{"oscillator_spectra", {}};
  double energy_res = 0.0, table_res = 0.0;
  bool ranking_ok = true, monotone_ok = true;
  for (int n = 1; n <= 6; ++n) {
    const SpectrumTable t = spectrum(n);
    if (static_cast<int>(t.rows.size()) != n + 1) table_res = 1.0;
    energy_res = std::max(energy_res, std::abs(t.rows.front().projective_energy -
                                               std::log1p(0.5 * n)));
    for (std::size_t r = 1; r < t.rows.size(); ++r)
      energy_res = std::max(energy_res, std::abs(t.rows[r].projective_energy -
                                                 std::log1p(1.0 + 0.5 * n)));
    if (t.rows.front().degeneracy != 1) table_res = 1.0;
    for (std::size_t r = 1; r < t.rows.size(); ++r)
      if (t.rows[r].degeneracy != n) table_res = 1.0;
    // identical ranking under both Hamiltonians
    for (std::size_t x = 0; x < t.rows.size(); ++x)
      for (std::size_t y = 0; y < t.rows.size(); ++y) {
        const bool lin_less = t.rows[x].linear_energy < t.rows[y].linear_energy;
        const bool proj_less = t.rows[x].projective_energy < t.rows[y].projective_energy;
        if (lin_less != proj_less) ranking_ok = false;
      }
  }
  // projective = log(1 + linear) and componentwise monotonicity on a grid
  for (std::uint64_t m1 = 0; m1 <= 4; ++m1)
    for (std::uint64_t m2 = 0; m2 <= 4; ++m2) {
      const OccupationVector m{{m1, m2}};
      energy_res = std::max(energy_res, std::abs(projective_energy(m) -
                                                 std::log(1.0 + linear_energy(m))));
      const OccupationVector bigger{{m1 + 1, m2}};
      if (projective_energy(bigger) <= projective_energy(m)) monotone_ok = false;
    }
  double gap_min = 1.0;
  double gap_prev = vacuum_is_nondegenerate(1).gap;
  bool gap_decreasing = true;
  for (int n = 2; n <= 1000000; n = (n < 100 ? n + 1 : n * 3)) {
    const VacuumGap g = vacuum_is_nondegenerate(n);
    gap_min = std::min(gap_min, g.gap);
    if (g.gap >= gap_prev) gap_decreasing = false;
    gap_prev = g.gap;
  }
  detail::add(rep, "table shape, energies, degeneracies", table_res + energy_res, 1e-12);
  detail::add(rep, "ranking identical under both Hamiltonians", ranking_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "projective energy monotone", monotone_ok ? 0.0 : 1.0, 0.0);
  detail::add_witness(rep, "vacuum gap positive up to n = 10^6", gap_min, 0.0);
  detail::add(rep, "vacuum gap decreasing in n", gap_decreasing ? 0.0 : 1.0, 0.0);
  return rep;
}

inline CheckReport run_states_checks() {
  CheckReport rep{"picard_states", {}};
  bool counts_ok = true, order_ok = true, flags_ok = true, symmetry_ok = true;
  for (int n = 1; n <= 8; ++n)
    for (int l = 1; l <= 8; ++l) {
      const BigUint count = state_count(n, l);
      const auto labels = enumerate_states(n, l);
      if (count != BigUint(labels.size())) counts_ok = false;
      if (count != young_dimension(n, l)) counts_ok = false;
      if (state_count(n, l) != binomial_exact(static_cast<std::uint64_t>(n + l),
                                              static_cast<std::uint64_t>(l)))
        symmetry_ok = false;
      for (int i = 0; i < n; ++i)
        if (labels.front().subset[static_cast<std::size_t>(i)] != i + 1) order_ok = false;
      for (std::size_t s = 1; s < labels.size(); ++s)
        if (!(labels[s - 1].subset < labels[s].subset)) order_ok = false;
      const VacuumDegeneracyReport r = vacuum_degeneracy_note(n, l);
      if (r.degenerate != (l > 1)) flags_ok = false;
    }
  detail::add(rep, "state_count = |enumeration| = young_dimension (n,l <= 8)",
              counts_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "binomial symmetry binom(n+l,n) = binom(n+l,l)", symmetry_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "lexicographic label order, first = {1..n}", order_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "vacuum degeneracy flag (l > 1)", flags_ok ? 0.0 : 1.0, 0.0);
  return rep;
}

inline CheckReport run_qh_checks(std::uint64_t seed = 4) {
  CheckReport rep{"qh_bundle", {}};
  Rng rng(seed);
  // dimensions
  bool dims_ok = fiber_dimension(1, 1) == 2 && fiber_dimension(2, 1) == 3 &&
                 fiber_dimension(2, 2) == 6 && fiber_dimension(3, -1) == 4 &&
                 fiber_dimension(5, 0) == 1;
  for (int n = 1; n <= 4; ++n)
    for (int l = 1; l <= 4; ++l)
      if (BigUint(fiber_dimension(n, l)) != state_count(n, l)) dims_ok = false;
  // block structure at l = 1
  double block_res = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (int rep_i = 0; rep_i < 10; ++rep_i) {
      const ProjectivePoint p = rng.overlap_point(n);
      const ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
      const AffineCoords a = to_affine(p, ChartId{1});
      const TransitionMatrix tm = transition_matrix(a, j, 1);
      block_res = std::max(block_res, std::abs(tm.matrix(0, 0) - transition_factor(a, j, 1)));
      const CMat jac = (j == a.chart) ? CMat::identity(a.z.size()) : jacobian(a, j);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          block_res = std::max(block_res,
                               std::abs(tm.matrix(static_cast<std::size_t>(r) + 1,
                                                  static_cast<std::size_t>(c) + 1) -
                                        jac(static_cast<std::size_t>(r),
                                            static_cast<std::size_t>(c))));
      for (int r = 0; r < n; ++r) {
        block_res = std::max(block_res, std::abs(tm.matrix(0, static_cast<std::size_t>(r) + 1)));
        block_res = std::max(block_res, std::abs(tm.matrix(static_cast<std::size_t>(r) + 1, 0)));
      }
    }
  }
  // cocycle and inner-product covariance for l in {-1, 1, 2}
  double cocycle_res = 0.0, invariance_res = 0.0, compat_res = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (const int l : {-1, 1, 2}) {
      const std::size_t d = static_cast<std::size_t>(fiber_dimension(n, l));
      for (int rep_i = 0; rep_i < 8; ++rep_i) {
        const ProjectivePoint p = rng.overlap_point(n);
        const ChartId i{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const ChartId j{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const ChartId k{1 + static_cast<int>(rng.next_u64() % (n + 1))};
        const AffineCoords ai = to_affine(p, i);
        const AffineCoords aj = to_affine(p, j);
        const AffineCoords ak = to_affine(p, k);
        const CMat prod = transition_matrix(ak, i, l).matrix * transition_matrix(aj, k, l).matrix *
                          transition_matrix(ai, j, l).matrix;
        cocycle_res = std::max(cocycle_res, max_abs(prod - CMat::identity(d)));
        // Gram covariance M^H G' M = G
        const CMat m = transition_matrix(ai, j, l).matrix;
        const CMat pulled = adjoint(m) * fiber_gram(aj, l) * m;
        invariance_res = std::max(invariance_res, max_abs(pulled - fiber_gram(ai, l)));
        // metric compatibility of the connection: d_j G = G Omega_j
        const AffineCoords a = rng.affine_point(n, 1.2);
        const std::vector<CMat> omega = connection_matrices(a, l);
        for (int dir = 0; dir < n; ++dir) {
          CMat dg(d, d);
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
              auto entry = [&](const CVec& z) {
                return fiber_gram(AffineCoords{a.chart, z}, l)(r, c);
              };
              dg(r, c) = numdiff::d(entry, a.z, static_cast<std::size_t>(dir));
            }
          compat_res = std::max(compat_res,
                                max_abs(dg - fiber_gram(a, l) * omega[static_cast<std::size_t>(dir)]));
        }
      }
    }
  }
  // transport unitarity, invertibility, linearity on a random two-chart path
  double norm_res = 0.0, invert_res = 0.0, linear_res = 0.0;
  {
    PhaseSpacePath path;
    PathSegment s1;
    s1.chart = ChartId{1};
    s1.points = {{Complex(0.1, 0.0)}, {Complex(0.8, 0.3)}, {Complex(1.1, -0.2)}};
    PathSegment s2;
    s2.chart = ChartId{2};
    const AffineCoords handoff =
        transition(AffineCoords{ChartId{1}, s1.points.back()}, ChartId{2});
    s2.points = {handoff.z, {Complex(0.4, 0.1)}};
    path.segments = {s1, s2};
    for (const int l : {-1, 1, 2}) {
      const std::size_t d = static_cast<std::size_t>(fiber_dimension(1, l));
      QHFiberState s;
      s.chart = ChartId{1};
      s.picard = l;
      s.amplitudes.assign(d, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < d; ++i)
        s.amplitudes[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      const AffineCoords start{ChartId{1}, s1.points.front()};
      const QHFiberState moved = parallel_transport(s, path);
      const AffineCoords end{ChartId{2}, s2.points.back()};
      norm_res = std::max(norm_res, std::abs(fiber_norm(moved, end) - fiber_norm(s, start)));
      const QHFiberState back = parallel_transport(moved, reversed_path(path));
      for (std::size_t i = 0; i < d; ++i)
        invert_res = std::max(invert_res, std::abs(back.amplitudes[i] - s.amplitudes[i]));
      // linearity against a second state
      QHFiberState s2state = s;
      for (auto& x : s2state.amplitudes) x *= Complex(0.3, -0.8);
      QHFiberState sum = s;
      for (std::size_t i = 0; i < d; ++i) sum.amplitudes[i] += s2state.amplitudes[i];
      const QHFiberState moved_sum = parallel_transport(sum, path);
      const QHFiberState moved_2 = parallel_transport(s2state, path);
      for (std::size_t i = 0; i < d; ++i)
        linear_res = std::max(linear_res, std::abs(moved_sum.amplitudes[i] -
                                                   moved.amplitudes[i] - moved_2.amplitudes[i]));
    }
  }
  // holonomy: nonflatness witness and unitarity
  const HolonomyResult hol = holonomy(square_loop(1, {Complex(0.0, 0.0)}, 0.5), 1);
  const double witness = operator_norm(hol.matrix - CMat::identity(2));
  const double unit_res =
      unitarity_residual(hol.matrix, fiber_gram(AffineCoords{ChartId{1}, {Complex(0.0, 0.0)}}, 1));
  // duality: two meridians disagree
  const auto [path_a, path_b] = two_paths_demo();
  const ProjectivePoint p0(CVec{Complex(1.0, 0.0), Complex(0.0, 0.0)});
  const ProjectivePoint q0(CVec{Complex(0.0, 0.0), Complex(1.0, 0.0)});
  const CMat da = duality_map(p0, q0, path_a, 1);
  const CMat db = duality_map(p0, q0, path_b, 1);
  const double duality_gap = max_abs(da - db);
  detail::add(rep, "fiber dimensions", dims_ok ? 0.0 : 1.0, 0.0);
  detail::add(rep, "l=1 transitions exactly block diag(t, J)", block_res, 0.0);
  detail::add(rep, "transition cocycle (l in {-1,1,2})", cocycle_res, 1e-9);
  detail::add(rep, "inner product chart invariant", invariance_res, 1e-9);
  detail::add(rep, "connection metric-compatible", compat_res, 1e-7);
  detail::add(rep, "transport preserves norm", norm_res, 1e-8);
  detail::add(rep, "transport reversible", invert_res, 1e-8);
  detail::add(rep, "transport linear", linear_res, 1e-10);
  detail::add_witness(rep, "square-loop holonomy differs from identity", witness, 1e-2);
  detail::add(rep, "holonomy unitary", unit_res, 1e-8);
  detail::add_witness(rep, "two-path duality maps differ", duality_gap, 1e-3);
  return rep;
}

inline CheckReport run_flow_checks(std::uint64_t seed = 5) {
  CheckReport rep{"classical_flow", {}};
  Rng rng(seed);
  double drift_res = 0.0, radius_res = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int rep_i = 0; rep_i < 4; ++rep_i) {
      for (const auto choice : {HamiltonianChoice::projective, HamiltonianChoice::linear}) {
        const AffineCoords a0 = rng.affine_point(n, 2.0);
        const Trajectory t = integrate(a0, choice, 10.0, 1e-10);
        const double e0 = t.samples.front().energy;
        for (const auto& s : t.samples) drift_res = std::max(drift_res, std::abs(s.energy - e0));
        if (n == 1) {
          const double r0 = std::abs(t.samples.front().a.z[0]);
          for (const auto& s : t.samples)
            radius_res = std::max(radius_res, std::abs(std::abs(s.a.z[0]) - r0));
        }
      }
    }
  }
  // analytic solution z(t) = z0 exp(-i (1+|z0|^2) t) for the projective flow
  double analytic_res = 0.0;
  {
    const AffineCoords a0{ChartId{1}, {Complex(1.0, 0.0)}};
    const Trajectory t = integrate(a0, HamiltonianChoice::projective, M_PI, 1e-10);
    analytic_res = std::abs(t.samples.back().a.z[0] - Complex(1.0, 0.0));
  }
  const double cross_res = cross_chart_consistency(AffineCoords{ChartId{1}, {Complex(1.0, 0.0)}},
                                                   HamiltonianChoice::projective, 3.0, ChartId{2});
  // the two flows agree near the origin to O(|z0|^3 t)
  double near_origin_res = 0.0;
  {
    const AffineCoords a0{ChartId{1}, {Complex(1e-3, 0.0)}};
    const Trajectory tp = integrate(a0, HamiltonianChoice::projective, 3.0, 1e-13);
    const Trajectory tl = integrate(a0, HamiltonianChoice::linear, 3.0, 1e-13);
    const Complex zp = tp.samples.back().a.z[0];
    const Complex zl = tl.samples.back().a.z[0];
    near_origin_res = std::abs(zp - zl) / (3.0 * 1e-9);
  }
  // fixed-step reruns are bit-identical
  bool fixed_ok = true;
  {
    const AffineCoords a0{ChartId{1}, {Complex(0.3, 0.4)}};
    const Trajectory t1 = integrate_fixed(a0, HamiltonianChoice::linear, 2.0, 1e-3);
    const Trajectory t2 = integrate_fixed(a0, HamiltonianChoice::linear, 2.0, 1e-3);
    for (std::size_t i = 0; i < t1.samples.size(); ++i)
      if (t1.samples[i].a.z[0] != t2.samples[i].a.z[0]) fixed_ok = false;
  }
  detail::add(rep, "energy drift over t_end=10 at tol 1e-10", drift_res, 1e-8);
  detail::add(rep, "|z| conserved (n=1)", radius_res, 1e-8);
  detail::add(rep, "analytic solution error at t = pi", analytic_res, 1e-6);
  detail::add(rep, "cross-chart residual", cross_res, 1e-6);
  detail::add(rep, "near-origin agreement of both flows (scaled)", near_origin_res, 3.0);
  detail::add(rep, "fixed-step mode bit-identical", fixed_ok ? 0.0 : 1.0, 0.0);
  return rep;
}

}  // namespace checks
}  // namespace qhb
