#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "gabor/periodic_set.hpp"

namespace gabor {

using cplx = std::complex<double>;

/// e^{2πi r/n} for integer r. Quarter turns are returned exactly.
cplx unit_root(std::int64_t r, std::int64_t n);

/// e^{2πi x} for real x. Quarter turns of the fractional part are exact.
cplx unit_phase(double x);

/// A finitely supported complex sequence: values[i] sits at index offset + i.
///
/// Stored values are trimmed at both ends so the first and last samples are
/// nonzero; the zero sequence has no samples at all.
class Window {
 public:
  Window() = default;
  /// Samples with |v| <= trim_threshold are dropped from the support edges.
  Window(std::int64_t offset, std::vector<cplx> values, double trim_threshold = 0.0);

  static Window delta(std::int64_t j, cplx amplitude = 1.0);
  /// amplitude · χ_{[first, first+length)}.
  static Window block(std::int64_t first, std::int64_t length, cplx amplitude);

  bool empty() const noexcept { return values_.empty(); }
  std::int64_t offset() const noexcept { return offset_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }

  /// Smallest and largest index of the support. Only meaningful when !empty().
  std::int64_t first() const noexcept { return offset_; }
  std::int64_t last() const noexcept { return offset_ + size() - 1; }
  /// max − min of the support; 0 for the zero window.
  std::int64_t width() const noexcept { return empty() ? 0 : size() - 1; }

  cplx operator()(std::int64_t j) const noexcept {
    const std::int64_t i = j - offset_;
    return (i >= 0 && i < size()) ? values_[static_cast<std::size_t>(i)] : cplx{};
  }

  double norm_squared() const noexcept;
  double norm() const noexcept;

  Window scaled(cplx factor) const;

  friend Window operator+(const Window& a, const Window& b);
  friend Window operator-(const Window& a, const Window& b);
  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<cplx> values_;
};

/// result(j) = e^{2πi m j / M} w(j).
Window modulate(const Window& w, std::int64_t m, std::int64_t M);
/// result(j) = w(j − shift).
Window translate(const Window& w, std::int64_t shift);
/// Σ_j a(j)·conj(b(j)).
cplx inner_product(const Window& a, const Window& b);
/// max_j |a(j) − b(j)|.
double max_abs_diff(const Window& a, const Window& b);

struct AtomIndex {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const AtomIndex&, const AtomIndex&) = default;
};

/// Multi-window Gabor system {E_{m/M} T_{nN} g_l} on an N-periodic set.
class GaborSystem {
 public:
  /// The set is re-expressed with period N; its period must divide N and
  /// every window must be supported inside it.
  GaborSystem(std::int64_t M, std::int64_t N, PeriodicSet set, std::vector<Window> windows);

  std::int64_t L() const noexcept { return static_cast<std::int64_t>(windows_.size()); }
  std::int64_t M() const noexcept { return M_; }
  std::int64_t N() const noexcept { return N_; }
  const PeriodicSet& set() const noexcept { return set_; }
  const std::vector<Window>& windows() const noexcept { return windows_; }
  const Window& window(std::int64_t l) const { return windows_.at(static_cast<std::size_t>(l)); }

  /// card(S_N).
  std::int64_t card_SN() const noexcept { return static_cast<std::int64_t>(set_.residues().size()); }

  bool same_shape(const GaborSystem& other) const noexcept;

  /// Same parameters, new windows.
  GaborSystem with_windows(std::vector<Window> windows) const;
  /// Every window multiplied by factor.
  GaborSystem scaled(cplx factor) const;

 private:
  std::int64_t M_;
  std::int64_t N_;
  PeriodicSet set_;
  std::vector<Window> windows_;
};

/// E_{m/M} T_{nN} g_l.
Window atom(const GaborSystem& sys, const AtomIndex& idx);

using Coefficients = std::map<AtomIndex, cplx>;

/// All nonzero ⟨f, E_{m/M}T_{nN}g_l⟩. Only translations whose shifted window
/// meets supp(f) are visited, so the enumeration is finite and exact.
Coefficients analysis_coefficients(const GaborSystem& sys, const Window& f);

/// Σ c_idx · atom(idx).
Window synthesis(const GaborSystem& sys, const Coefficients& coeffs);

/// Σ |c|².
double coefficient_energy(const Coefficients& coeffs);

}  // namespace gabor
