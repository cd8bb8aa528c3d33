#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gabor/signal.hpp"

namespace gabor {

/// Band-limited cross-correlation table
///
///   G_k(j) = Σ_l Σ_n h_l(j − nN) · conj(g_l(j + kM − nN)),
///
/// stored for j ∈ S_N and |k| ≤ band_radius. The table is N-periodic in j,
/// so lookups reduce j mod N; entries for j ∉ S or |k| > band_radius are 0.
///
/// With this convention the mixed frame operator f ↦ Σ ⟨f, g-atom⟩ h-atom
/// acts as (S f)(j) = M Σ_k G_k(j) f(j + kM).
class CorrelationTable {
 public:
  CorrelationTable(std::int64_t L, std::int64_t M, std::int64_t N, PeriodicSet set,
                   std::int64_t band_radius, std::int64_t support_width,
                   std::vector<cplx> entries);

  std::int64_t L() const noexcept { return L_; }
  std::int64_t M() const noexcept { return M_; }
  std::int64_t N() const noexcept { return N_; }
  const PeriodicSet& set() const noexcept { return set_; }
  std::int64_t band_radius() const noexcept { return band_radius_; }
  /// Widest window support (max − min) among the windows the table was built from.
  std::int64_t support_width() const noexcept { return support_width_; }

  /// Residues j ∈ S_N that index the stored rows.
  const std::vector<std::int64_t>& rows() const noexcept { return set_.residues(); }

  cplx operator()(std::int64_t k, std::int64_t j) const noexcept;

  /// Same parameters, all entries multiplied by factor.
  CorrelationTable scaled(cplx factor) const;

  /// CSV rows "j,k,re,im" for every stored entry.
  void write_csv(std::ostream& os) const;

 private:
  std::size_t slot(std::size_t row, std::int64_t k) const noexcept {
    return row * static_cast<std::size_t>(2 * band_radius_ + 1) +
           static_cast<std::size_t>(k + band_radius_);
  }

  std::int64_t L_, M_, N_;
  PeriodicSet set_;
  std::int64_t band_radius_;
  std::int64_t support_width_;
  std::vector<cplx> entries_;
};

/// Table of sysH against sysG (h in the first slot, g conjugated).
CorrelationTable cross_correlation_table(const GaborSystem& sysG, const GaborSystem& sysH);

CorrelationTable autocorrelation_table(const GaborSystem& sys);

/// ⟨S f, f⟩ = M Σ_j Σ_k G_k(j) f(j + kM) conj(f(j)) for an autocorrelation table;
/// equals Σ |⟨f, atom⟩|². Throws ImaginaryResidue if the imaginary part exceeds
/// tol·max(1, ‖f‖²).
double energy_via_table(const CorrelationTable& t, const Window& f, double tol = 1e-12);

}  // namespace gabor
