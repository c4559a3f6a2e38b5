#include <doctest.h>

#include <cmath>

#include "qhb/classical_flow.hpp"
#include "qhb/numdiff.hpp"
#include "qhb/rng.hpp"

using namespace qhb;

TEST_CASE("hamiltonian values") {
  const AffineCoords origin{ChartId{1}, {Complex(0.0, 0.0)}};
  CHECK(hamiltonian_value(origin, HamiltonianChoice::projective) == 0.0);
  CHECK(hamiltonian_value(origin, HamiltonianChoice::linear) == 0.0);

  const AffineCoords one{ChartId{1}, {Complex(1.0, 0.0)}};
  CHECK(std::abs(hamiltonian_value(one, HamiltonianChoice::projective) - std::log(2.0)) < 1e-15);
  CHECK(hamiltonian_value(one, HamiltonianChoice::linear) == 1.0);

  Rng rng(61);
  for (int rep = 0; rep < 50; ++rep) {
    const AffineCoords a = rng.affine_point(2, 2.0);
    CHECK(hamiltonian_value(a, HamiltonianChoice::projective) <=
          hamiltonian_value(a, HamiltonianChoice::linear));
  }
}

TEST_CASE("vector field closed forms") {
  const AffineCoords origin{ChartId{1}, {Complex(0.0, 0.0)}};
  CHECK(max_abs(hamiltonian_vector_field(origin, HamiltonianChoice::projective)) == 0.0);

  const AffineCoords one{ChartId{1}, {Complex(1.0, 0.0)}};
  CHECK(std::abs(hamiltonian_vector_field(one, HamiltonianChoice::projective)[0]) ==
        doctest::Approx(2.0));
  CHECK(std::abs(hamiltonian_vector_field(one, HamiltonianChoice::linear)[0]) ==
        doctest::Approx(4.0));

  // tangent to circles |z| = const
  Rng rng(62);
  for (int rep = 0; rep < 30; ++rep) {
    const AffineCoords a = rng.affine_point(1, 2.0);
    for (const auto choice : {HamiltonianChoice::projective, HamiltonianChoice::linear}) {
      const Complex zdot = hamiltonian_vector_field(a, choice)[0];
      CHECK(std::abs((std::conj(a.z[0]) * zdot).real()) < 1e-13);
    }
  }
}

TEST_CASE("vector field agrees with -i ginv dbar H in any dimension") {
  Rng rng(63);
  for (int n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 8; ++rep) {
      const AffineCoords a = rng.affine_point(n, 1.5);
      for (const auto choice : {HamiltonianChoice::projective, HamiltonianChoice::linear}) {
        const CVec field = hamiltonian_vector_field(a, choice);
        const CMat ginv = inverse_metric(a);
        auto h = [&](const CVec& z) -> Complex {
          return hamiltonian_value(AffineCoords{a.chart, z}, choice);
        };
        for (int i = 0; i < n; ++i) {
          Complex acc(0.0, 0.0);
          for (int j = 0; j < n; ++j)
            acc += ginv(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) *
                   numdiff::dbar(h, a.z, static_cast<std::size_t>(j));
          CHECK(std::abs(Complex(0.0, -1.0) * acc - field[static_cast<std::size_t>(i)]) < 1e-7);
        }
      }
    }
}

TEST_CASE("integration conserves energy and radius") {
  Rng rng(64);
  for (int n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 7; ++rep)
      for (const auto choice : {HamiltonianChoice::projective, HamiltonianChoice::linear}) {
        const AffineCoords a0 = rng.affine_point(n, 2.0);
        const Trajectory t = integrate(a0, choice, 10.0, 1e-10);
        CHECK(t.samples.back().t == 10.0);
        const double e0 = t.samples.front().energy;
        for (const auto& s : t.samples) CHECK(std::abs(s.energy - e0) < 1e-8);
        if (n == 1) {
          const double r0 = std::abs(t.samples.front().a.z[0]);
          for (const auto& s : t.samples) CHECK(std::abs(std::abs(s.a.z[0]) - r0) < 1e-8);
        }
      }
}

TEST_CASE("fixed point at the origin") {
  const AffineCoords origin{ChartId{1}, {Complex(0.0, 0.0)}};
  const Trajectory t = integrate(origin, HamiltonianChoice::projective, 1.0, 1e-10);
  for (const auto& s : t.samples) CHECK(std::abs(s.a.z[0]) == 0.0);
}

TEST_CASE("projective flow matches the analytic solution") {
  // z(t) = z0 exp(-i (1 + |z0|^2) t): at z0 = 1 the period is pi
  const AffineCoords one{ChartId{1}, {Complex(1.0, 0.0)}};
  const Trajectory t = integrate(one, HamiltonianChoice::projective, M_PI, 1e-10);
  CHECK(std::abs(t.samples.back().a.z[0] - Complex(1.0, 0.0)) < 1e-6);

  Rng rng(65);
  for (int rep = 0; rep < 5; ++rep) {
    const AffineCoords a0 = rng.affine_point(1, 1.5);
    const double s0 = squared_radius(a0);
    const double t_end = 2.0;
    const Trajectory tp = integrate(a0, HamiltonianChoice::projective, t_end, 1e-11);
    const Complex expected_p = a0.z[0] * std::exp(Complex(0.0, -(1.0 + s0) * t_end));
    CHECK(std::abs(tp.samples.back().a.z[0] - expected_p) < 1e-7);
    const Trajectory tl = integrate(a0, HamiltonianChoice::linear, t_end, 1e-11);
    const Complex expected_l = a0.z[0] * std::exp(Complex(0.0, -(1.0 + s0) * (1.0 + s0) * t_end));
    CHECK(std::abs(tl.samples.back().a.z[0] - expected_l) < 1e-7);
  }
}

TEST_CASE("fixed-step integrator converges at fourth order and reruns bitwise") {
  const AffineCoords a0{ChartId{1}, {Complex(0.8, 0.0)}};
  const Complex exact = a0.z[0] * std::exp(Complex(0.0, -(1.0 + 0.64) * 1.0));
  const double err_h = std::abs(
      integrate_fixed(a0, HamiltonianChoice::projective, 1.0, 0.02).samples.back().a.z[0] - exact);
  const double err_h2 = std::abs(
      integrate_fixed(a0, HamiltonianChoice::projective, 1.0, 0.01).samples.back().a.z[0] - exact);
  CHECK(err_h / err_h2 > 10.0);
  CHECK(err_h / err_h2 < 26.0);

  const Trajectory t1 = integrate_fixed(a0, HamiltonianChoice::linear, 2.0, 1e-3);
  const Trajectory t2 = integrate_fixed(a0, HamiltonianChoice::linear, 2.0, 1e-3);
  REQUIRE(t1.samples.size() == t2.samples.size());
  for (std::size_t i = 0; i < t1.samples.size(); ++i) {
    CHECK(t1.samples[i].a.z[0] == t2.samples[i].a.z[0]);
    CHECK(t1.samples[i].energy == t2.samples[i].energy);
  }
}

TEST_CASE("cross-chart consistency") {
  const AffineCoords a0{ChartId{1}, {Complex(1.0, 0.0)}};
  const double res = cross_chart_consistency(a0, HamiltonianChoice::projective, 3.0, ChartId{2});
  CHECK(res < 1e-6);

  // tightening the tolerance does not worsen the residual (both tiny)
  const double res_loose =
      cross_chart_consistency(a0, HamiltonianChoice::projective, 3.0, ChartId{2}, 1e-5);
  const double res_tight =
      cross_chart_consistency(a0, HamiltonianChoice::projective, 3.0, ChartId{2}, 1e-11);
  CHECK(res_tight <= res_loose * 1.5 + 1e-10);

  // a trajectory through the excluded point of the target chart throws
  const AffineCoords near_zero{ChartId{1}, {Complex(0.0, 0.0)}};
  CHECK_THROWS_AS(
      cross_chart_consistency(near_zero, HamiltonianChoice::projective, 1.0, ChartId{2}),
      ChartExcluded);
}

TEST_CASE("the two flows agree near the origin to cubic order") {
  const double radius = 1e-3;
  const double t_end = 3.0;
  const AffineCoords a0{ChartId{1}, {Complex(radius, 0.0)}};
  const Trajectory tp = integrate(a0, HamiltonianChoice::projective, t_end, 1e-13);
  const Trajectory tl = integrate(a0, HamiltonianChoice::linear, t_end, 1e-13);
  const double diff = std::abs(tp.samples.back().a.z[0] - tl.samples.back().a.z[0]);
  CHECK(diff < 3.0 * radius * radius * radius * t_end);
  CHECK(diff > 0.0);
}

TEST_CASE("argument validation") {
  const AffineCoords a0{ChartId{1}, {Complex(0.5, 0.0)}};
  CHECK_THROWS_AS(integrate(a0, HamiltonianChoice::linear, -1.0, 1e-8), DomainError);
  CHECK_THROWS_AS(integrate(a0, HamiltonianChoice::linear, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(integrate_fixed(a0, HamiltonianChoice::linear, 1.0, 0.0), DomainError);
}
