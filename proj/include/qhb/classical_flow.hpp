#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qhb/chart_atlas.hpp"
#include "qhb/fubini_study.hpp"

// Hamiltonian dynamics on a CP^n chart for the projective Hamiltonian
// K = log(1 + |z|^2) and its linear truncation |z|^2. The flow convention is
// zdot^i = -i g^{i jbar} dH/dzbar^j, which makes the linear oscillator rotate
// clockwise with unit frequency at the origin. For Fubini-Study both fields
// are radial phase rotations: zdot = -i z (1+|z|^2) resp. -i z (1+|z|^2)^2.

namespace qhb {

enum class HamiltonianChoice { projective, linear };

inline double hamiltonian_value(const AffineCoords& a, HamiltonianChoice choice) {
  return choice == HamiltonianChoice::projective ? kahler_potential(a)
                                                 : quadratic_approximation(a);
}

inline CVec hamiltonian_vector_field(const AffineCoords& a, HamiltonianChoice choice) {
  const double s = squared_radius(a);
  const double rate = choice == HamiltonianChoice::projective ? (1.0 + s) : (1.0 + s) * (1.0 + s);
  CVec v(a.z.size());
  for (std::size_t i = 0; i < a.z.size(); ++i) v[i] = Complex(0.0, -rate) * a.z[i];
  return v;
}

struct TrajectorySample {
  double t = 0.0;
  AffineCoords a;
  double energy = 0.0;
};

struct IntegratorStats {
  std::uint64_t steps = 0;
  std::uint64_t rejected = 0;
  double max_step_error = 0.0;  // largest accepted local error estimate
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  IntegratorStats stats;
};

namespace detail {

inline CVec flow_rhs(ChartId chart, HamiltonianChoice choice, const CVec& z) {
  return hamiltonian_vector_field(AffineCoords{chart, z}, choice);
}

// The same Hamiltonian system written in chart j when its defining expression
// lives in chart k: evaluate the field there and push it forward with the
// transition Jacobian.
inline CVec pushed_flow_rhs(ChartId j, ChartId k, HamiltonianChoice choice, const CVec& w) {
  const AffineCoords aj{j, w};
  const AffineCoords ak = transition(aj, k);
  return jacobian(ak, j) * hamiltonian_vector_field(ak, choice);
}

inline CVec axpy(const CVec& z, double h, const CVec& k) {
  CVec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] + h * k[i];
  return out;
}

// Dormand-Prince 5(4) coefficients.
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
};

}  // namespace detail

// Adaptive Dormand-Prince loop over a generic field; on_sample fires at t=0
// and at every accepted step.
template <typename Rhs, typename OnSample>
IntegratorStats dopri5_core(Rhs&& rhs, CVec& z, double t_end, double tol, OnSample&& on_sample) {
  if (!(t_end > 0.0)) throw DomainError("integrate: need t_end > 0");
  if (!(tol > 0.0)) throw DomainError("integrate: need tol > 0");
  using D = detail::Dopri5;
  IntegratorStats stats;
  double t = 0.0;
  double h = std::min(0.01, t_end);
  on_sample(0.0, z);
  CVec k1 = rhs(z);
  while (t < t_end) {
    if (t + h > t_end) h = t_end - t;
    const CVec k2 = rhs(detail::axpy(z, h * D::a21, k1));
    CVec tmp(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) tmp[i] = z[i] + h * (D::a31 * k1[i] + D::a32 * k2[i]);
    const CVec k3 = rhs(tmp);
    for (std::size_t i = 0; i < z.size(); ++i)
      tmp[i] = z[i] + h * (D::a41 * k1[i] + D::a42 * k2[i] + D::a43 * k3[i]);
    const CVec k4 = rhs(tmp);
    for (std::size_t i = 0; i < z.size(); ++i)
      tmp[i] = z[i] + h * (D::a51 * k1[i] + D::a52 * k2[i] + D::a53 * k3[i] + D::a54 * k4[i]);
    const CVec k5 = rhs(tmp);
    for (std::size_t i = 0; i < z.size(); ++i)
      tmp[i] = z[i] +
               h * (D::a61 * k1[i] + D::a62 * k2[i] + D::a63 * k3[i] + D::a64 * k4[i] +
                    D::a65 * k5[i]);
    const CVec k6 = rhs(tmp);
    CVec z_new(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
      z_new[i] = z[i] + h * (D::b1 * k1[i] + D::b3 * k3[i] + D::b4 * k4[i] + D::b5 * k5[i] +
                             D::b6 * k6[i]);
    const CVec k7 = rhs(z_new);
    double err = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const Complex e = h * (D::e1 * k1[i] + D::e3 * k3[i] + D::e4 * k4[i] + D::e5 * k5[i] +
                             D::e6 * k6[i] + D::e7 * k7[i]);
      const double scale = tol + tol * std::max(std::abs(z[i]), std::abs(z_new[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (err <= 1.0) {
      t += h;
      if (t_end - t < 1e-14 * std::max(1.0, t_end)) t = t_end;
      z = std::move(z_new);
      k1 = k7;  // FSAL
      stats.steps += 1;
      stats.max_step_error = std::max(stats.max_step_error, err * tol);
      on_sample(t, z);
    } else {
      stats.rejected += 1;
    }
    const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, factor));
    if (h < 1e-12 && t < t_end)
      throw StepFailure("integrate: step size collapsed below 1e-12 at t = " + std::to_string(t));
  }
  return stats;
}

// Adaptive integration to t_end with local error controlled by tol (relative
// and absolute). Samples are recorded at every accepted step.
inline Trajectory integrate(const AffineCoords& a0, HamiltonianChoice choice, double t_end,
                            double tol) {
  Trajectory traj;
  CVec z = a0.z;
  traj.stats = dopri5_core(
      [&](const CVec& state) { return detail::flow_rhs(a0.chart, choice, state); }, z, t_end, tol,
      [&](double time, const CVec& state) {
        AffineCoords a{a0.chart, state};
        traj.samples.push_back({time, a, hamiltonian_value(a, choice)});
      });
  return traj;
}

// Fixed-step classic RK4; bit-identical outputs for identical inputs.
inline Trajectory integrate_fixed(const AffineCoords& a0, HamiltonianChoice choice, double t_end,
                                  double h) {
  if (!(t_end > 0.0) || !(h > 0.0)) throw DomainError("integrate_fixed: need t_end > 0, h > 0");
  if (t_end / h > 1e8) throw DomainError("integrate_fixed: more than 1e8 steps requested");
  Trajectory traj;
  CVec z = a0.z;
  const auto steps = static_cast<std::uint64_t>(std::ceil(t_end / h - 1e-12));
  auto record = [&](double time, const CVec& state) {
    AffineCoords a{a0.chart, state};
    traj.samples.push_back({time, a, hamiltonian_value(a, choice)});
  };
  record(0.0, z);
  for (std::uint64_t s = 0; s < steps; ++s) {
    const double t0 = static_cast<double>(s) * h;
    const double hs = std::min(h, t_end - t0);
    const CVec k1 = detail::flow_rhs(a0.chart, choice, z);
    const CVec k2 = detail::flow_rhs(a0.chart, choice, detail::axpy(z, 0.5 * hs, k1));
    const CVec k3 = detail::flow_rhs(a0.chart, choice, detail::axpy(z, 0.5 * hs, k2));
    const CVec k4 = detail::flow_rhs(a0.chart, choice, detail::axpy(z, hs, k3));
    for (std::size_t i = 0; i < z.size(); ++i)
      z[i] += hs / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    traj.stats.steps += 1;
    record(t0 + hs, z);
  }
  return traj;
}

// Integrate in the starting chart, map each sample to chart j, and compare
// with an independent integration performed in chart j of the same global
// Hamiltonian (its chart-j field is the pushforward of the chart-k one).
// Returns the largest pointwise coordinate distance in chart j. Throws
// ChartExcluded when the trajectory leaves the overlap.
inline double cross_chart_consistency(const AffineCoords& a0, HamiltonianChoice choice,
                                      double t_end, ChartId j, double tol = 1e-10,
                                      int samples = 128) {
  const AffineCoords b0 = transition(a0, j);
  double residual = 0.0;
  const double dt = t_end / samples;
  CVec za = a0.z;
  CVec zb = b0.z;
  auto rhs_a = [&](const CVec& state) { return detail::flow_rhs(a0.chart, choice, state); };
  auto rhs_b = [&](const CVec& state) {
    return detail::pushed_flow_rhs(j, a0.chart, choice, state);
  };
  auto ignore = [](double, const CVec&) {};
  for (int s = 1; s <= samples; ++s) {
    dopri5_core(rhs_a, za, dt, tol, ignore);
    dopri5_core(rhs_b, zb, dt, tol, ignore);
    const AffineCoords mapped = transition(AffineCoords{a0.chart, za}, j);
    for (std::size_t i = 0; i < mapped.z.size(); ++i)
      residual = std::max(residual, std::abs(mapped.z[i] - zb[i]));
  }
  return residual;
}

}  // namespace qhb
