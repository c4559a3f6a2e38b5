#include <doctest.h>

#include <cmath>

#include "qhb/oscillator_spectra.hpp"
#include "qhb/qh_bundle.hpp"
#include "qhb/rng.hpp"

using namespace qhb;

TEST_CASE("linear energies are exact half-integers") {
  CHECK(linear_energy(OccupationVector{{0, 0}}) == 1.0);
  CHECK(linear_energy(OccupationVector{{3}}) == 3.5);
  // additive across independent modes
  CHECK(linear_energy(OccupationVector{{2, 5}}) ==
        linear_energy(OccupationVector{{2}}) + linear_energy(OccupationVector{{5}}));
}

TEST_CASE("projective energies") {
  CHECK(std::abs(projective_energy(OccupationVector{{0}}) - std::log(1.5)) < 1e-15);
  CHECK(std::abs(projective_energy(OccupationVector{{0}}) - 0.4054651081081644) < 1e-12);
  CHECK(std::abs(projective_energy(OccupationVector{{1}}) - 0.9162907318741551) < 1e-12);
  CHECK(std::abs(projective_energy(OccupationVector{{0, 0}}) - std::log(2.0)) < 1e-15);

  Rng rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    OccupationVector m{{rng.next_u64() % 50, rng.next_u64() % 50, rng.next_u64() % 50}};
    CHECK(std::abs(projective_energy(m) - std::log(1.0 + linear_energy(m))) < 1e-12);
  }
}

TEST_CASE("monotonicity in each occupation number") {
  Rng rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    OccupationVector m{{rng.next_u64() % 10, rng.next_u64() % 10}};
    OccupationVector bigger = m;
    bigger.m[rng.next_u64() % 2] += 1 + rng.next_u64() % 3;
    CHECK(projective_energy(bigger) > projective_energy(m));
  }
}

TEST_CASE("allowed states are the vacuum plus n unit vectors") {
  const auto s1 = allowed_states(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == OccupationVector{{0}});
  CHECK(s1[1] == OccupationVector{{1}});

  const auto s3 = allowed_states(3);
  CHECK(s3.size() == 4);
  int vacua = 0;
  for (const auto& s : s3) {
    std::uint64_t total = 0;
    for (auto v : s.m) total += v;
    if (total == 0) ++vacua;
    CHECK(total <= 1);
  }
  CHECK(vacua == 1);
  CHECK_THROWS_AS(allowed_states(0), DomainError);
}

TEST_CASE("spectrum tables") {
  const SpectrumTable t1 = spectrum(1);
  REQUIRE(t1.rows.size() == 2);
  CHECK(std::abs(t1.rows[0].projective_energy - std::log(1.5)) < 1e-15);
  CHECK(std::abs(t1.rows[1].projective_energy - std::log(2.5)) < 1e-15);
  CHECK(t1.rows[0].degeneracy == 1);
  CHECK(t1.rows[1].degeneracy == 1);

  const SpectrumTable t2 = spectrum(2);
  REQUIRE(t2.rows.size() == 3);
  CHECK(t2.rows[0].degeneracy == 1);
  CHECK(t2.rows[1].degeneracy == 2);
  CHECK(t2.rows[2].degeneracy == 2);

  for (int n = 1; n <= 6; ++n) {
    const SpectrumTable t = spectrum(n);
    CHECK(t.rows.size() == static_cast<std::size_t>(n) + 1);
    CHECK(t.rows.size() == fiber_dimension(n, 1));
    // degeneracies over distinct levels sum to the table length
    int sum = 0;
    double prev_energy = -1.0;
    for (const auto& r : t.rows) {
      if (r.projective_energy != prev_energy) sum += r.degeneracy;
      prev_energy = r.projective_energy;
    }
    CHECK(sum == n + 1);
    CHECK(std::abs(t.rows.front().projective_energy - std::log1p(0.5 * n)) < 1e-12);
    for (std::size_t r = 1; r < t.rows.size(); ++r) {
      CHECK(std::abs(t.rows[r].projective_energy - std::log1p(1.0 + 0.5 * n)) < 1e-12);
      CHECK(t.rows[r - 1].projective_energy <= t.rows[r].projective_energy);
    }
    // the logarithm preserves the ranking given by the linear energies
    for (const auto& x : t.rows)
      for (const auto& y : t.rows)
        CHECK((x.linear_energy < y.linear_energy) ==
              (x.projective_energy < y.projective_energy));
  }
}

TEST_CASE("vacuum gap is positive, decreasing, and explicit for n = 1") {
  const VacuumGap g1 = vacuum_is_nondegenerate(1);
  CHECK(g1.nondegenerate);
  CHECK(std::abs(g1.gap - std::log(5.0 / 3.0)) < 1e-15);
  CHECK(g1.gap == doctest::Approx(0.5108256238).epsilon(1e-9));

  double prev = g1.gap;
  for (int n = 2; n <= 1000; ++n) {
    const VacuumGap g = vacuum_is_nondegenerate(n);
    CHECK(g.gap > 0.0);
    CHECK(g.gap < prev);
    prev = g.gap;
  }
  for (int n = 1000; n <= 1000000; n += 7919) CHECK(vacuum_is_nondegenerate(n).gap > 0.0);
  CHECK(vacuum_is_nondegenerate(1000000).gap > 0.0);
}

TEST_CASE("unrestricted comparison table") {
  const SpectrumTable t = unrestricted_spectrum(1, 2);
  REQUIRE(t.rows.size() == 3);
  CHECK(std::abs(t.rows[2].projective_energy - std::log(3.5)) < 1e-15);
  // truncating reproduces the head of the unrestricted table for n = 1
  const SpectrumTable head = spectrum(1);
  for (std::size_t r = 0; r < head.rows.size(); ++r)
    CHECK(head.rows[r].projective_energy == t.rows[r].projective_energy);
}
