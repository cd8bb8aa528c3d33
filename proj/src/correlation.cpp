#include "gabor/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

CorrelationTable::CorrelationTable(std::int64_t L, std::int64_t M, std::int64_t N, PeriodicSet set,
                                   std::int64_t band_radius, std::int64_t support_width,
                                   std::vector<cplx> entries)
    : L_(L), M_(M), N_(N), set_(std::move(set)), band_radius_(band_radius),
      support_width_(support_width), entries_(std::move(entries)) {
  if (set_.period() != N_) set_ = set_.with_period(N_);
  const auto expected = set_.residues().size() * static_cast<std::size_t>(2 * band_radius_ + 1);
  if (entries_.size() != expected) {
    throw Error(ErrorKind::DimensionMismatch, "correlation table has " +
                                                  std::to_string(entries_.size()) +
                                                  " entries, expected " + std::to_string(expected));
  }
}

cplx CorrelationTable::operator()(std::int64_t k, std::int64_t j) const noexcept {
  if (k < -band_radius_ || k > band_radius_) return {};
  const auto& res = set_.residues();
  const auto r = mod_floor(j, N_);
  const auto it = std::lower_bound(res.begin(), res.end(), r);
  if (it == res.end() || *it != r) return {};
  return entries_[slot(static_cast<std::size_t>(it - res.begin()), k)];
}

CorrelationTable CorrelationTable::scaled(cplx factor) const {
  std::vector<cplx> out(entries_);
  for (auto& v : out) v *= factor;
  return CorrelationTable(L_, M_, N_, set_, band_radius_, support_width_, std::move(out));
}

void CorrelationTable::write_csv(std::ostream& os) const {
  os << "j,k,re,im\n";
  const auto prec = os.precision(17);
  for (std::size_t row = 0; row < rows().size(); ++row) {
    for (std::int64_t k = -band_radius_; k <= band_radius_; ++k) {
      const cplx v = entries_[slot(row, k)];
      os << rows()[row] << ',' << k << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
  os.precision(prec);
}

CorrelationTable cross_correlation_table(const GaborSystem& sysG, const GaborSystem& sysH) {
  if (!sysG.same_shape(sysH)) {
    throw Error(ErrorKind::ParameterMismatch, "systems differ in (L, M, N, S)");
  }
  const std::int64_t L = sysG.L();
  const std::int64_t M = sysG.M();
  const std::int64_t N = sysG.N();

  // G_k vanishes unless kM ∈ [min supp g − max supp h, max supp g − min supp h].
  std::int64_t g_lo = std::numeric_limits<std::int64_t>::max(), g_hi = std::numeric_limits<std::int64_t>::min();
  std::int64_t h_lo = g_lo, h_hi = g_hi;
  std::int64_t width = 0;
  for (std::int64_t l = 0; l < L; ++l) {
    const Window& g = sysG.window(l);
    const Window& h = sysH.window(l);
    width = std::max({width, g.width(), h.width()});
    if (!g.empty()) g_lo = std::min(g_lo, g.first()), g_hi = std::max(g_hi, g.last());
    if (!h.empty()) h_lo = std::min(h_lo, h.first()), h_hi = std::max(h_hi, h.last());
  }
  std::int64_t band = 0;
  const bool any = g_lo <= g_hi && h_lo <= h_hi;
  if (any) {
    const std::int64_t k_lo = div_ceil(g_lo - h_hi, M);
    const std::int64_t k_hi = div_floor(g_hi - h_lo, M);
    band = std::max<std::int64_t>({0, -k_lo, k_hi});
  }

  const auto& rows = sysG.set().residues();
  const std::size_t stride = static_cast<std::size_t>(2 * band + 1);
  std::vector<cplx> entries(rows.size() * stride);
  if (any) {
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const std::int64_t j = rows[row];
      for (std::int64_t k = -band; k <= band; ++k) {
        cplx acc{};
        for (std::int64_t l = 0; l < L; ++l) {
          const Window& g = sysG.window(l);
          const Window& h = sysH.window(l);
          if (g.empty() || h.empty()) continue;
          // h_l(j − nN) ≠ 0 needs j − nN ∈ [h.first, h.last]
          const std::int64_t n_lo = div_ceil(j - h.last(), N);
          const std::int64_t n_hi = div_floor(j - h.first(), N);
          for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            acc += h(j - n * N) * std::conj(g(j + k * M - n * N));
          }
        }
        entries[row * stride + static_cast<std::size_t>(k + band)] = acc;
      }
    }
  }
  return CorrelationTable(L, M, N, sysG.set(), band, width, std::move(entries));
}

CorrelationTable autocorrelation_table(const GaborSystem& sys) {
  return cross_correlation_table(sys, sys);
}

double energy_via_table(const CorrelationTable& t, const Window& f, double tol) {
  if (f.empty()) return 0.0;
  const std::int64_t M = t.M();
  const std::int64_t R = t.band_radius();
  cplx acc{};
  for (std::int64_t j = f.first(); j <= f.last(); ++j) {
    const cplx fj = f(j);
    if (fj == cplx{} || !t.set().contains(j)) continue;
    cplx row{};
    for (std::int64_t k = -R; k <= R; ++k) row += t(k, j) * f(j + k * M);
    acc += row * std::conj(fj);
  }
  acc *= static_cast<double>(M);
  if (std::abs(acc.imag()) > tol * std::max(1.0, f.norm_squared())) {
    throw Error(ErrorKind::ImaginaryResidue,
                "energy has imaginary part " + std::to_string(acc.imag()));
  }
  return acc.real();
}

}  // namespace gabor
