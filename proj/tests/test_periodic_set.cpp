#include <doctest.h>

#include <random>

#include "gabor/error.hpp"
#include "gabor/periodic_set.hpp"

using gabor::PeriodicSet;

TEST_CASE("make_periodic_set normalizes residues") {
  const auto z = PeriodicSet::make(1, {0});
  CHECK(z.period() == 1);
  CHECK(z.residues() == std::vector<std::int64_t>{0});
  CHECK(z == PeriodicSet::integers());

  const auto even = PeriodicSet::make(2, {0});
  CHECK(even.residues() == std::vector<std::int64_t>{0});

  const auto s = PeriodicSet::make(3, {5, 2, -1});
  CHECK(s.residues() == std::vector<std::int64_t>{2});
}

TEST_CASE("empty residue list is rejected") {
  const std::vector<std::int64_t> none;
  CHECK_THROWS_AS(PeriodicSet::make(3, none), gabor::Error);
  try {
    PeriodicSet::make(3, none);
  } catch (const gabor::Error& e) {
    CHECK(e.kind() == gabor::ErrorKind::InvalidSet);
  }
  CHECK_THROWS_AS(PeriodicSet::make(0, {0}), gabor::Error);
}

TEST_CASE("contains") {
  const auto even = PeriodicSet::make(2, {0});
  CHECK(even.contains(4));
  CHECK_FALSE(even.contains(-3));
  CHECK(PeriodicSet::integers().contains(17));
}

TEST_CASE("truncation_cardinality") {
  CHECK(PeriodicSet::integers().truncation_cardinality(3) == 3);
  CHECK(PeriodicSet::make(2, {0}).truncation_cardinality(2) == 1);
  // enumerate 0..11 for residues {0, 2} mod 4
  const auto s = PeriodicSet::make(4, {0, 2});
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < 12; ++j) count += s.contains(j) ? 1 : 0;
  CHECK(count == 6);
  CHECK(s.truncation_cardinality(12) == 6);
  CHECK(s.truncation_cardinality(3) == 2);
}

TEST_CASE("with_period keeps membership") {
  const auto s = PeriodicSet::make(2, {1});
  const auto t = s.with_period(6);
  CHECK(t.residues() == std::vector<std::int64_t>{1, 3, 5});
  for (std::int64_t j = -20; j <= 20; ++j) CHECK(s.contains(j) == t.contains(j));
  CHECK_THROWS_AS(s.with_period(5), gabor::Error);
}

TEST_CASE("property: translation invariance and truncation counts") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::int64_t> period_d(1, 9), value_d(-50, 50);
    const std::int64_t N = period_d(rng);
    std::vector<std::int64_t> raw(static_cast<std::size_t>(1 + trial % 5));
    for (auto& r : raw) r = value_d(rng);
    const auto s = PeriodicSet::make(N, raw);
    for (std::size_t i = 1; i < s.residues().size(); ++i) CHECK(s.residues()[i - 1] < s.residues()[i]);
    const std::int64_t j = value_d(rng), n = value_d(rng);
    CHECK(s.contains(j) == s.contains(j + n * N));
    const std::int64_t m = 1 + trial % 4;
    CHECK(s.truncation_cardinality(m * N) == m * static_cast<std::int64_t>(s.residues().size()));
  }
}
