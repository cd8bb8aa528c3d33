#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gabor/constructor.hpp"
#include "gabor/error.hpp"
#include "gabor/frame_analysis.hpp"

using namespace gabor;

TEST_CASE("construct_parseval(2, 2, 3)") {
  const auto sys = construct_parseval(2, 2, 3);
  CHECK(sys.L() == 2);
  CHECK(sys.window(0).first() == 0);
  CHECK(sys.window(0).size() == 2);
  CHECK(sys.window(1) == Window::delta(2, fixtures::kInvSqrt2));
  CHECK(parseval_check_exact(sys) == std::optional<bool>(true));
  // (1/√2)² rounds above 1/2, so only the exact path can use tol = 0
  CHECK(parseval_check(autocorrelation_table(sys)));
}

TEST_CASE("construct_parseval pads with zero windows") {
  const auto sys = construct_parseval(4, 3, 5);
  CHECK(sys.window(2).empty());
  CHECK(sys.window(3).empty());
  CHECK(parseval_check(autocorrelation_table(sys)));
  CHECK_THROWS_AS(construct_parseval(1, 2, 3), Error);
  try {
    construct_parseval(1, 2, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DensityViolation);
  }
}

TEST_CASE("construct_orthonormal") {
  const auto sys = construct_orthonormal(3, 4, 12);
  CHECK(orthonormal_check_exact(sys) == std::optional<bool>(true));
  CHECK(orthonormal_check(sys, autocorrelation_table(sys)));
  CHECK_THROWS_AS(construct_orthonormal(3, 4, 11), Error);
}

TEST_CASE("construct_parseval over a parameter sweep") {
  for (std::int64_t M = 1; M <= 5; ++M) {
    for (std::int64_t N = 1; N <= 12; ++N) {
      const std::int64_t L = (N + M - 1) / M;
      const auto sys = construct_parseval(L, M, N);
      const auto t = autocorrelation_table(sys);
      CHECK(parseval_check(t));
      CHECK(analyze(sys).is_riesz == (N == L * M));
    }
  }
}

TEST_CASE("completion window count") {
  CHECK(completion_window_count(2, 3) == 2);
  CHECK(completion_window_count(4, 12) == 3);
  CHECK(completion_window_count(5, 1) == 1);
}

TEST_CASE("dual_completion produces a dual pair") {
  std::mt19937_64 rng(37);
  fixtures::SystemShape shape;
  shape.integers_only = true;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = fixtures::random_system(rng, shape);
    std::vector<Window> hw;
    for (std::int64_t l = 0; l < g.L(); ++l) hw.push_back(fixtures::random_window(rng, g.set(), -4, 8, 6));
    const auto h = g.with_windows(hw);
    const auto [G, H] = dual_completion(g, h);
    CHECK(G.L() == g.L() + completion_window_count(g.M(), g.N()));
    CHECK(H.L() == G.L());
    CHECK(dual_check(cross_correlation_table(G, H), 1e-9));
  }
}

TEST_CASE("dual_completion preconditions") {
  const auto even = PeriodicSet::make(2, {0});
  const auto g = fixtures::single(2, 2, Window::delta(0), even);
  CHECK_THROWS_AS(dual_completion(g, g), Error);
  CHECK_THROWS_AS(dual_completion(fixtures::example_a(), fixtures::example_b()), Error);
}
