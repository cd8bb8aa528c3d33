#pragma once

#include <cstdint>
#include <vector>

#include "gabor/signal.hpp"

namespace gabor {

/// z_M f(j, θ) = Σ_k f(j + kM) e^{2πikθ}, an exact finite sum.
cplx zak_point(const Window& f, std::int64_t M, std::int64_t j, double theta);

/// Samples z(j, t/T) for j ∈ ℕ_M, t ∈ ℕ_T.
class ZakGrid {
 public:
  ZakGrid(std::int64_t M, std::int64_t T, std::vector<cplx> samples);

  std::int64_t M() const noexcept { return M_; }
  std::int64_t T() const noexcept { return T_; }
  cplx operator()(std::int64_t j, std::int64_t t) const noexcept {
    return samples_[static_cast<std::size_t>(j * T_ + t)];
  }
  double theta(std::int64_t t) const noexcept { return static_cast<double>(t) / static_cast<double>(T_); }

 private:
  std::int64_t M_, T_;
  std::vector<cplx> samples_;
};

ZakGrid zak_grid(const Window& f, std::int64_t M, std::int64_t T);

/// Largest number of stored samples of f in one residue class j + Mℤ.
std::int64_t zak_k_span(const Window& f, std::int64_t M);

/// max(64, 4·k_span + 1) over the system's windows.
std::int64_t default_grid(const GaborSystem& sys);

/// Σ_l |z_M g_l(j, t/T)|² as an M × T row-major array.
std::vector<double> zak_energy(const GaborSystem& sys, std::int64_t T);

struct ZakFrameEstimate {
  double A_est = 0.0;  ///< M · min over the T-grid of Σ_l |z|²
  double B_est = 0.0;  ///< M · max over the T-grid
  double refined_A = 0.0;  ///< same on the 2T grid
  double refined_B = 0.0;
  std::int64_t grid = 0;
  bool is_frame = false;
};

/// Frame bounds for N = M on ℓ²(ℤ) from the Zak energy. Throws ShapeViolation
/// if N ≠ M and UnsupportedSet if S ≠ ℤ.
ZakFrameEstimate frame_check_NM(const GaborSystem& sys, std::int64_t T, double tol = 1e-10);

/// Completeness for N = M: each residue class mod M is hit by some window.
bool completeness_check_NM(const GaborSystem& sys);

/// True when no common zero of the Zak transforms is seen on the T grid nor
/// on the refined 2T grid.
bool common_zero_check(const GaborSystem& sys, std::int64_t T, double tol = 1e-10);

/// Necessary Riesz-basis condition for N = LM:
/// LA/M − tol ≤ Σ_l |z_M g_l|² ≤ LB/M + tol on the grid.
bool necessary_check_NLM(const GaborSystem& sys, double A, double B, std::int64_t T,
                         double tol = 1e-10);

struct ZakZero {
  std::int64_t j = 0;
  double theta = 0.0;
  double magnitude = 0.0;  ///< |z_M f(j, θ)| as recomputed
};

/// Zeros forced by symmetry: odd f vanishes at (0, 0), (0, 1/2) and, for even M,
/// (M/2, 0); even f with even M vanishes at (M/2, 1/2).
std::vector<ZakZero> symmetry_zeros(const Window& f, std::int64_t M);

bool is_odd(const Window& f);
bool is_even(const Window& f);

/// |Σ_j (1/T) Σ_t |z(j, t/T)|² − ‖f‖²|. Throws GridTooCoarse when
/// T < 2·k_span + 1, below which the quadrature is not exact.
double zak_unitarity_residual(const Window& f, std::int64_t M, std::int64_t T);

/// e^{−r k²} truncated to the smallest radius whose discarded tail mass is
/// below tail_tol·‖g‖².
Window truncated_gaussian(double r = 1.0, double tail_tol = 1e-14);

}  // namespace gabor
