#pragma once

#include <cstdint>
#include <optional>

#include "gabor/correlation.hpp"

namespace gabor {

inline constexpr double kDefaultTol = 1e-10;

struct SufficientBounds {
  double A = 0.0;
  double B = 0.0;
  bool is_bessel = true;
  /// A > 0. A non-positive A means "inconclusive", never "not a frame".
  bool is_frame = false;
};

/// Diagonal-dominance bounds from the correlation table:
/// B = M max_j Σ_k |G_k(j)|, A = M min_j (G_0(j) − Σ_{k≠0} |G_k(j)|).
SufficientBounds sufficient_bounds(const CorrelationTable& t);

/// Necessary condition for (A, B) to be frame bounds: A/M ≤ G_0(j) ≤ B/M on S_N,
/// each side relaxed by tol.
bool necessary_diagonal_check(const CorrelationTable& t, double A, double B, double tol = kDefaultTol);

/// Parseval iff G_0 ≡ 1/M and G_k ≡ 0 for k ≠ 0 on S_N.
bool parseval_check(const CorrelationTable& t, double tol = kDefaultTol);

/// Dual pair iff the cross table has G_0 ≡ 1/M and G_k ≡ 0 for k ≠ 0.
/// Same conditions as parseval_check, applied to a cross table.
bool dual_check(const CorrelationTable& tc, double tol = kDefaultTol);

struct DensityVerdict {
  bool density_ok = false;  ///< card(S_N) ≤ LM
  bool is_riesz = false;    ///< frame and card(S_N) = LM
};

DensityVerdict density_and_riesz(const GaborSystem& sys, bool is_frame);

/// Orthonormal basis test. Evaluated in two equivalent forms (Parseval with
/// card(S_N) = LM, and Parseval with unit-norm windows); throws
/// FormDisagreement if they differ.
bool orthonormal_check(const GaborSystem& sys, const CorrelationTable& t, double tol = kDefaultTol);

struct NarrowBounds {
  double A = 0.0;
  double B = 0.0;
  bool is_frame = false;
};

/// Optimal bounds when every window has support width < M; the frame operator
/// is then diagonal, (Sf)(j) = M G_0(j) f(j). Throws SupportTooWide otherwise.
NarrowBounds narrow_support_frame(const CorrelationTable& t);

/// (S f)(j) = M Σ_k G_k(j) f(j + kM), evaluated exactly on the finite band.
Window apply_frame_operator(const CorrelationTable& tc, const Window& f);

/// S⁻¹f = f / (M G_0) in the narrow-support regime. Throws SingularDiagonal
/// if G_0 vanishes somewhere on S_N.
Window apply_inverse_frame_operator_narrow(const CorrelationTable& t, const Window& f);

struct PerturbationBounds {
  double A = 0.0;
  double B = 0.0;
  double R = 0.0;
};

/// R = M max_j Σ_k |G^{g−h}_k(j)|. When R < A the perturbed system is a frame with
/// bounds A(1 − √(R/A))², B(1 + √(R/B))²; otherwise the test is inconclusive.
std::optional<PerturbationBounds> perturbation_bound(const GaborSystem& sys_g,
                                                     const GaborSystem& sys_h, double A, double B);

/// The quantity R above, always returned.
double perturbation_radius(const GaborSystem& sys_g, const GaborSystem& sys_h);

struct RayleighBounds {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  std::int64_t trials = 0;
};

/// Monte-Carlo oracle: min/max of Σ|⟨f, atom⟩|² / ‖f‖² over random f ∈ ℓ₀(S)
/// supported in [−radius, radius]. Coefficients come from exact enumeration.
RayleighBounds randomized_rayleigh_bounds(const GaborSystem& sys, std::int64_t trials,
                                          std::int64_t support_radius, std::uint64_t seed);

/// One random test signal as used by the oracle: support points uniform in
/// S ∩ [−radius, radius], complex standard normal amplitudes.
Window random_signal(const PeriodicSet& set, std::int64_t support_radius, std::uint64_t seed);

// Exact mode -----------------------------------------------------------------

/// Correlation table with every entry a Gaussian integer over a common
/// denominator: G_k(j) = numerator / denominator.
struct ExactTable {
  std::int64_t M = 1;
  std::int64_t denominator = 1;
  std::int64_t band_radius = 0;
  std::vector<std::int64_t> rows;
  /// (re, im) numerators, row-major over rows × [−band, band].
  std::vector<std::pair<std::int64_t, std::int64_t>> numerators;
};

/// Lifts every window value v to (a + ib)/√d with integers a, b, checking that
/// the double arithmetic a/√d reproduces v bit for bit. Returns nothing if
/// some value is not on that lattice.
std::optional<ExactTable> exact_autocorrelation(const GaborSystem& sys, std::int64_t d);

/// Parseval test with zero tolerance on an exact table.
bool parseval_check_exact(const ExactTable& t);

/// Parseval in exact arithmetic (lattice denominator M); nullopt if not liftable.
std::optional<bool> parseval_check_exact(const GaborSystem& sys);
/// Parseval and card(S_N) = LM in exact arithmetic; nullopt if not liftable.
std::optional<bool> orthonormal_check_exact(const GaborSystem& sys);

// Report -----------------------------------------------------------------------

struct FrameReport {
  std::optional<double> bessel_bound;
  std::optional<double> lower_bound;
  bool is_bessel = true;
  bool is_frame_sufficient = false;
  bool is_parseval = false;
  bool is_riesz = false;
  bool is_orthonormal = false;
  bool density_ok = false;
  std::int64_t card_SN = 0;
  std::int64_t LM = 0;
  /// Present when every window has support width < M.
  std::optional<NarrowBounds> narrow;
  double tol = kDefaultTol;
};

FrameReport analyze(const GaborSystem& sys, double tol = kDefaultTol);

}  // namespace gabor
