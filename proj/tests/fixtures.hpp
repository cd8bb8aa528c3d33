#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gabor/signal.hpp"

namespace fixtures {

using gabor::cplx;
using gabor::GaborSystem;
using gabor::PeriodicSet;
using gabor::Window;

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Two-window Parseval frame: L=2, M=2, N=3, g_0 = (δ_0+δ_1)/√2, g_1 = δ_2/√2.
inline GaborSystem example_a() {
  return GaborSystem(2, 3, PeriodicSet::integers(),
                     {Window(0, {kInvSqrt2, kInvSqrt2}), Window::delta(2, kInvSqrt2)});
}

/// Three-window orthonormal basis: L=3, M=4, N=12, g_l = χ_[4l, 4l+4) / 2.
inline GaborSystem example_b() {
  return GaborSystem(4, 12, PeriodicSet::integers(),
                     {Window::block(0, 4, 0.5), Window::block(4, 4, 0.5), Window::block(8, 4, 0.5)});
}

/// The block basis without its last window.
inline GaborSystem example_b_minus_last() {
  return GaborSystem(4, 12, PeriodicSet::integers(), {Window::block(0, 4, 0.5), Window::block(4, 4, 0.5)});
}

inline GaborSystem single(std::int64_t M, std::int64_t N, Window g,
                          PeriodicSet set = PeriodicSet::integers()) {
  return GaborSystem(M, N, std::move(set), {std::move(g)});
}

inline cplx complex_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

/// Random window supported in the given set, first index in [lo, lo+spread),
/// at most max_len samples.
inline Window random_window(std::mt19937_64& rng, const PeriodicSet& set, std::int64_t lo,
                            std::int64_t spread, std::int64_t max_len) {
  std::uniform_int_distribution<std::int64_t> start_d(lo, lo + spread - 1);
  std::uniform_int_distribution<std::int64_t> len_d(1, max_len);
  const std::int64_t start = start_d(rng);
  const std::int64_t len = len_d(rng);
  std::vector<cplx> values(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i) {
    if (set.contains(start + i)) values[static_cast<std::size_t>(i)] = complex_normal(rng);
  }
  return Window(start, std::move(values));
}

inline PeriodicSet random_set(std::mt19937_64& rng, std::int64_t N) {
  std::bernoulli_distribution coin(0.35);
  if (coin(rng)) return PeriodicSet::integers();
  std::vector<std::int64_t> res;
  std::bernoulli_distribution keep(0.6);
  for (std::int64_t r = 0; r < N; ++r) {
    if (keep(rng)) res.push_back(r);
  }
  if (res.empty()) res.push_back(0);
  return PeriodicSet::make(N, res);
}

struct SystemShape {
  std::int64_t max_L = 3, max_M = 4, max_N = 6, max_len = 6;
  bool integers_only = false;
  bool n_equals_m = false;
};

inline GaborSystem random_system(std::mt19937_64& rng, const SystemShape& shape = {}) {
  std::uniform_int_distribution<std::int64_t> L_d(1, shape.max_L), M_d(1, shape.max_M), N_d(1, shape.max_N);
  const std::int64_t L = L_d(rng);
  const std::int64_t M = M_d(rng);
  const std::int64_t N = shape.n_equals_m ? M : N_d(rng);
  const PeriodicSet set = shape.integers_only ? PeriodicSet::integers() : random_set(rng, N);
  std::vector<Window> windows;
  for (std::int64_t l = 0; l < L; ++l) windows.push_back(random_window(rng, set, -4, 8, shape.max_len));
  return GaborSystem(M, N, set, std::move(windows));
}

inline Window random_signal(std::mt19937_64& rng, const PeriodicSet& set, std::int64_t radius) {
  return random_window(rng, set, -radius, radius + 1, radius + 1);
}

}  // namespace fixtures
