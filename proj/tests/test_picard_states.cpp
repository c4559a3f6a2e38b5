#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qhb/picard_states.hpp"
#include "qhb/qh_bundle.hpp"

using namespace qhb;

namespace {

// Pascal-triangle oracle, independent of the multiplicative rule.
std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("BigUint arithmetic and printing") {
  CHECK(BigUint(0).to_string() == "0");
  CHECK(BigUint(1234567890123456789ull).to_string() == "1234567890123456789");
  BigUint v(1);
  for (int i = 0; i < 25; ++i) v.mul_small(1000000000u);  // 10^225
  const std::string s = v.to_string();
  CHECK(s.size() == 226);
  CHECK(s.front() == '1');
  CHECK_THROWS_AS(BigUint(10).div_small_exact(3), DomainError);
}

TEST_CASE("binomials match a Pascal-triangle oracle") {
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) {
      const BigUint b = binomial_exact(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
      CHECK(b.fits_u64());
      CHECK(b.to_u64() == pascal(n, k));
    }
  // beyond 64 bits the exact value is still consistent under the symmetry
  CHECK(binomial_exact(130, 65) == binomial_exact(130, 65));
  CHECK(!binomial_exact(130, 65).fits_u64());
  CHECK_THROWS_AS(binomial_u64(130, 65), DomainError);
}

TEST_CASE("state counts") {
  CHECK(state_count(1, 1) == BigUint(2));
  CHECK(state_count(2, 2) == BigUint(6));
  CHECK(state_count(3, 1) == BigUint(4));
  CHECK_THROWS_AS(state_count(0, 1), DomainError);
  CHECK_THROWS_AS(state_count(1, 0), DomainError);
}

TEST_CASE("enumeration is lexicographic and complete") {
  const auto s11 = enumerate_states(1, 1);
  REQUIRE(s11.size() == 2);
  CHECK(s11[0].subset == std::vector<int>{1});
  CHECK(s11[1].subset == std::vector<int>{2});

  const auto s21 = enumerate_states(2, 1);
  REQUIRE(s21.size() == 3);
  CHECK(s21[0].subset == std::vector<int>{1, 2});
  CHECK(s21[1].subset == std::vector<int>{1, 3});
  CHECK(s21[2].subset == std::vector<int>{2, 3});

  for (int n = 1; n <= 5; ++n)
    for (int l = 1; l <= 5; ++l) {
      const auto labels = enumerate_states(n, l);
      CHECK(BigUint(labels.size()) == state_count(n, l));
      for (int i = 0; i < n; ++i) CHECK(labels.front().subset[static_cast<std::size_t>(i)] == i + 1);
      for (std::size_t s = 1; s < labels.size(); ++s) CHECK(labels[s - 1].subset < labels[s].subset);
    }
}

TEST_CASE("young dimension equals the state count") {
  CHECK(young_dimension(2, 3) == BigUint(10));
  for (int l = 1; l <= 6; ++l) CHECK(young_dimension(1, l) == BigUint(static_cast<std::uint64_t>(l) + 1));
  for (int n = 1; n <= 8; ++n)
    for (int l = 1; l <= 8; ++l) {
      CHECK(young_dimension(n, l) == state_count(n, l));
      // symmetry binom(n+l, n) = binom(n+l, l)
      CHECK(state_count(n, l) ==
            binomial_exact(static_cast<std::uint64_t>(n + l), static_cast<std::uint64_t>(l)));
    }
  CHECK(representation_info(2, 3).dimension == BigUint(10));
}

TEST_CASE("consistency with the bundle fiber dimension") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(fiber_dimension(n, 1) == static_cast<std::uint64_t>(n) + 1);
    for (int l = 1; l <= 5; ++l)
      CHECK(BigUint(fiber_dimension(n, l)) == state_count(n, l));
  }
}

TEST_CASE("vacuum degeneracy notes") {
  CHECK(!vacuum_degeneracy_note(2, 1).degenerate);
  CHECK(vacuum_degeneracy_note(1, 2).degenerate);
  CHECK(vacuum_degeneracy_note(3, 4).degenerate);
  const auto trivial = vacuum_degeneracy_note(3, 0);
  CHECK(!trivial.degenerate);
  CHECK(trivial.realizing_labels == BigUint(1));
  CHECK(vacuum_degeneracy_note(1, 2).realizing_labels == BigUint(3));
}
