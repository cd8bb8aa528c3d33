#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gabor/signal.hpp"

namespace gabor {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-9;

/// The Gabor system transported to ℤ_P, P a common multiple of M, N and the
/// set period. Columns of the synthesis matrix are the periodized atoms
/// g̃(j) = Σ_r atom(j + rP), ordered l outer, n ∈ ℕ_{P/N} middle, m inner.
///
/// Verdicts computed on this model hold for the model only; they are a finite
/// witness for statements about ℓ²(S), not a proof.
class FiniteModel {
 public:
  FiniteModel(const GaborSystem& sys, std::int64_t periods);

  std::int64_t P() const noexcept { return P_; }
  std::int64_t M() const noexcept { return M_; }
  std::int64_t N() const noexcept { return N_; }
  std::int64_t L() const noexcept { return L_; }
  std::int64_t atom_count() const noexcept { return static_cast<std::int64_t>(atoms_.size()); }
  const Matrix& synthesis() const noexcept { return U_; }
  const std::vector<AtomIndex>& atoms() const noexcept { return atoms_; }
  /// Indices of ℕ_P that belong to S.
  const std::vector<std::int64_t>& set_rows() const noexcept { return set_rows_; }
  /// Some window is wider than P, so periodization folds it onto itself.
  bool wraps() const noexcept { return wraps_; }

  /// U Uᴴ.
  Matrix frame_operator() const;

  /// Periodizes a finitely supported signal onto ℤ_P.
  Vector periodize(const Window& f) const;

  /// Diagonal matrix of e^{2πi m j/M}, j ∈ ℕ_P.
  Matrix modulation_matrix(std::int64_t m) const;
  /// Cyclic shift (T x)(j) = x(j − shift).
  Matrix translation_matrix(std::int64_t shift) const;

 private:
  std::int64_t P_, M_, N_, L_;
  Matrix U_;
  std::vector<AtomIndex> atoms_;
  std::vector<std::int64_t> set_rows_;
  bool wraps_ = false;
};

/// P = periods · lcm(M, N, set period).
FiniteModel build_model(const GaborSystem& sys, std::int64_t periods = 1);

struct KOperator {
  Matrix matrix;
};

struct SpectralBounds {
  double A = 0.0;
  double B = 0.0;
};

/// Extreme eigenvalues of U Uᴴ restricted to the rows and columns in S.
SpectralBounds spectral_frame_bounds(const FiniteModel& model);

/// Orthogonal projector onto range(U), from an SVD with numerical rank
/// threshold tol·σ_max.
Matrix range_projector(const Matrix& U, double tol = kDefaultRankTol);

/// ‖(I − Π_U) K‖_F relative to max(1, ‖K‖_F).
double douglas_residual(const FiniteModel& model, const KOperator& K, double tol = kDefaultRankTol);

/// range(K) ⊆ range(U).
bool douglas_range_check(const FiniteModel& model, const KOperator& K, double tol = kDefaultRankTol);

struct KFrameVerdict {
  bool is_kframe = false;
  std::optional<double> A_opt;
  double B = 0.0;
  /// K = 0: every A works, so A_opt is left empty.
  bool zero_operator = false;
  std::int64_t P = 0;
};

/// K-frame verdict with optimal lower bound A_opt = 1 / λ_max(Kᴴ (U Uᴴ)⁺ K).
KFrameVerdict kframe_verdict(const FiniteModel& model, const KOperator& K, double tol = kDefaultRankTol);

/// U_g U_hᴴ. The g-system is an S_{h,g}-frame with this operator.
KOperator s_hg_matrix(const FiniteModel& model_g, const FiniteModel& model_h);

/// Minimal-norm K-dual: L = U⁺ K, returned as the P × atom_count matrix whose
/// column i is f_i = Lᴴ e_i. Throws RangeViolation if range(K) ⊄ range(U).
Matrix k_dual_minimal_norm(const FiniteModel& model, const KOperator& K, double tol = kDefaultRankTol);

/// max over `samples` random x of ‖K x − Σ_i ⟨x, f_i⟩ atom_i‖ / max(1, ‖x‖).
double k_dual_reconstruction_error(const FiniteModel& model, const KOperator& K,
                                   const Matrix& duals, int samples, std::uint64_t seed);

/// U injective: full column rank with σ_min > tol·σ_max.
bool k_minimality_check(const FiniteModel& model, double tol = kDefaultRankTol);

/// {Mopᴴ a_i} reconstructs K·Mop on 20 random vectors.
bool km_composition_check(const FiniteModel& model, const KOperator& K, const KOperator& Mop,
                          const Matrix& kduals, double tol = 1e-9, std::uint64_t seed = 7);

/// Standard complex normal test vector of length n.
Vector random_vector(std::int64_t n, std::uint64_t seed);

}  // namespace gabor
