#include "gabor/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

namespace {

std::vector<Window> tiling_windows(std::int64_t L, std::int64_t M, std::int64_t N) {
  const cplx amplitude = 1.0 / std::sqrt(static_cast<double>(M));
  std::vector<Window> windows;
  windows.reserve(static_cast<std::size_t>(L));
  for (std::int64_t first = 0; first < N; first += M) {
    windows.push_back(Window::block(first, std::min(M, N - first), amplitude));
  }
  windows.resize(static_cast<std::size_t>(L));
  return windows;
}

void require_positive(std::int64_t L, std::int64_t M, std::int64_t N) {
  if (L < 1 || M < 1 || N < 1) {
    throw Error(ErrorKind::ParameterMismatch, "L, M, N must be positive");
  }
}

}  // namespace

GaborSystem construct_parseval(std::int64_t L, std::int64_t M, std::int64_t N) {
  require_positive(L, M, N);
  if (N > L * M) {
    throw Error(ErrorKind::DensityViolation,
                "N = " + std::to_string(N) + " exceeds LM = " + std::to_string(L * M));
  }
  return GaborSystem(M, N, PeriodicSet::integers(), tiling_windows(L, M, N));
}

GaborSystem construct_orthonormal(std::int64_t L, std::int64_t M, std::int64_t N) {
  require_positive(L, M, N);
  if (N != L * M) {
    throw Error(ErrorKind::ShapeViolation,
                "N = " + std::to_string(N) + " differs from LM = " + std::to_string(L * M));
  }
  return GaborSystem(M, N, PeriodicSet::integers(), tiling_windows(L, M, N));
}

std::int64_t completion_window_count(std::int64_t M, std::int64_t N) { return div_ceil(N, M); }

std::pair<GaborSystem, GaborSystem> dual_completion(const GaborSystem& sys_g,
                                                    const GaborSystem& sys_h) {
  if (!sys_g.same_shape(sys_h)) {
    throw Error(ErrorKind::ParameterMismatch, "systems differ in (L, M, N, S)");
  }
  if (!sys_g.set().is_integers()) {
    throw Error(ErrorKind::UnsupportedSet, "dual completion is defined on ℓ²(ℤ) only");
  }
  const std::int64_t M = sys_g.M(), N = sys_g.N();
  const std::int64_t K = completion_window_count(M, N);
  const GaborSystem aux = construct_parseval(K, M, N);

  std::vector<Window> g_out(sys_g.windows());
  std::vector<Window> h_out(sys_h.windows());
  for (const Window& gp : aux.windows()) {
    // Ψ* g' = g' − U_h U_g* g'
    const Window mixed = synthesis(sys_h, analysis_coefficients(sys_g, gp));
    g_out.push_back(gp);
    h_out.push_back(gp - mixed);
  }
  return {sys_g.with_windows(std::move(g_out)), sys_h.with_windows(std::move(h_out))};
}

}  // namespace gabor
