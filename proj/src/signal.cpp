#include "gabor/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

cplx unit_root(std::int64_t r, std::int64_t n) {
  const std::int64_t k = mod_floor(r, n);
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

cplx unit_phase(double x) {
  const double frac = x - std::floor(x);
  const double quarters = 4.0 * frac;
  if (quarters == std::floor(quarters)) {
    return unit_root(static_cast<std::int64_t>(quarters), 4);
  }
  const double angle = 2.0 * std::numbers::pi * frac;
  return {std::cos(angle), std::sin(angle)};
}

Window::Window(std::int64_t offset, std::vector<cplx> values, double trim_threshold)
    : offset_(offset), values_(std::move(values)) {
  auto negligible = [trim_threshold](cplx v) { return std::abs(v) <= trim_threshold; };
  auto head = std::find_if_not(values_.begin(), values_.end(), negligible);
  if (head == values_.end()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  auto tail = std::find_if_not(values_.rbegin(), values_.rend(), negligible).base();
  offset_ += head - values_.begin();
  values_ = std::vector<cplx>(head, tail);
}

Window Window::delta(std::int64_t j, cplx amplitude) { return Window(j, {amplitude}); }

Window Window::block(std::int64_t first, std::int64_t length, cplx amplitude) {
  return Window(first, std::vector<cplx>(static_cast<std::size_t>(std::max<std::int64_t>(length, 0)), amplitude));
}

double Window::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s;
}

double Window::norm() const noexcept { return std::sqrt(norm_squared()); }

Window Window::scaled(cplx factor) const {
  std::vector<cplx> out(values_);
  for (auto& v : out) v *= factor;
  return Window(offset_, std::move(out));
}

namespace {

template <typename Op>
Window combine(const Window& a, const Window& b, Op op) {
  if (a.empty() && b.empty()) return {};
  std::int64_t lo, hi;
  if (a.empty()) {
    lo = b.first(), hi = b.last();
  } else if (b.empty()) {
    lo = a.first(), hi = a.last();
  } else {
    lo = std::min(a.first(), b.first());
    hi = std::max(a.last(), b.last());
  }
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) out[static_cast<std::size_t>(j - lo)] = op(a(j), b(j));
  return Window(lo, std::move(out));
}

}  // namespace

Window operator+(const Window& a, const Window& b) {
  return combine(a, b, [](cplx x, cplx y) { return x + y; });
}

Window operator-(const Window& a, const Window& b) {
  return combine(a, b, [](cplx x, cplx y) { return x - y; });
}

Window modulate(const Window& w, std::int64_t m, std::int64_t M) {
  if (M < 1) throw Error(ErrorKind::ParameterMismatch, "modulation order must be positive");
  std::vector<cplx> out(w.values());
  for (std::int64_t i = 0; i < w.size(); ++i) {
    out[static_cast<std::size_t>(i)] *= unit_root(m * (w.offset() + i), M);
  }
  return Window(w.offset(), std::move(out));
}

Window translate(const Window& w, std::int64_t shift) {
  if (w.empty()) return w;
  return Window(w.offset() + shift, w.values());
}

cplx inner_product(const Window& a, const Window& b) {
  if (a.empty() || b.empty()) return {};
  const std::int64_t lo = std::max(a.first(), b.first());
  const std::int64_t hi = std::min(a.last(), b.last());
  cplx s{};
  for (std::int64_t j = lo; j <= hi; ++j) s += a(j) * std::conj(b(j));
  return s;
}

double max_abs_diff(const Window& a, const Window& b) {
  const Window d = a - b;
  double worst = 0.0;
  for (const auto& v : d.values()) worst = std::max(worst, std::abs(v));
  return worst;
}

GaborSystem::GaborSystem(std::int64_t M, std::int64_t N, PeriodicSet set, std::vector<Window> windows)
    : M_(M), N_(N), set_(std::move(set)), windows_(std::move(windows)) {
  if (M_ < 1 || N_ < 1) {
    throw Error(ErrorKind::ParameterMismatch, "M and N must be positive");
  }
  if (windows_.empty()) {
    throw Error(ErrorKind::ParameterMismatch, "a Gabor system needs at least one window");
  }
  if (set_.period() != N_) set_ = set_.with_period(N_);
  for (std::size_t l = 0; l < windows_.size(); ++l) {
    const Window& g = windows_[l];
    for (std::int64_t j = g.first(); !g.empty() && j <= g.last(); ++j) {
      if (g(j) != cplx{} && !set_.contains(j)) {
        throw Error(ErrorKind::InvalidWindow, "window " + std::to_string(l) +
                                                  " is nonzero at " + std::to_string(j) +
                                                  ", outside the periodic set");
      }
    }
  }
}

bool GaborSystem::same_shape(const GaborSystem& other) const noexcept {
  return L() == other.L() && M_ == other.M_ && N_ == other.N_ && set_ == other.set_;
}

GaborSystem GaborSystem::with_windows(std::vector<Window> windows) const {
  return GaborSystem(M_, N_, set_, std::move(windows));
}

GaborSystem GaborSystem::scaled(cplx factor) const {
  std::vector<Window> out;
  out.reserve(windows_.size());
  for (const auto& g : windows_) out.push_back(g.scaled(factor));
  return with_windows(std::move(out));
}

Window atom(const GaborSystem& sys, const AtomIndex& idx) {
  if (idx.l < 0 || idx.l >= sys.L() || idx.m < 0 || idx.m >= sys.M()) {
    throw Error(ErrorKind::InvalidAtom, "atom index (" + std::to_string(idx.l) + ", " +
                                            std::to_string(idx.m) + ", " + std::to_string(idx.n) +
                                            ") out of range");
  }
  return modulate(translate(sys.window(idx.l), idx.n * sys.N()), idx.m, sys.M());
}

Coefficients analysis_coefficients(const GaborSystem& sys, const Window& f) {
  Coefficients out;
  if (f.empty()) return out;
  const std::int64_t M = sys.M();
  const std::int64_t N = sys.N();
  std::vector<cplx> product;
  for (std::int64_t l = 0; l < sys.L(); ++l) {
    const Window& g = sys.window(l);
    if (g.empty()) continue;
    // shifted support [g.first + nN, g.last + nN] must meet [f.first, f.last]
    const std::int64_t n_lo = div_ceil(f.first() - g.last(), N);
    const std::int64_t n_hi = div_floor(f.last() - g.first(), N);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      const std::int64_t lo = std::max(f.first(), g.first() + n * N);
      const std::int64_t hi = std::min(f.last(), g.last() + n * N);
      product.assign(static_cast<std::size_t>(hi - lo + 1), cplx{});
      for (std::int64_t j = lo; j <= hi; ++j) {
        product[static_cast<std::size_t>(j - lo)] = f(j) * std::conj(g(j - n * N));
      }
      for (std::int64_t m = 0; m < M; ++m) {
        cplx c{};
        for (std::int64_t j = lo; j <= hi; ++j) {
          c += product[static_cast<std::size_t>(j - lo)] * unit_root(-m * j, M);
        }
        if (c != cplx{}) out.emplace(AtomIndex{l, m, n}, c);
      }
    }
  }
  return out;
}

Window synthesis(const GaborSystem& sys, const Coefficients& coeffs) {
  bool any = false;
  std::int64_t lo = 0, hi = -1;
  for (const auto& [idx, c] : coeffs) {
    const Window& g = sys.window(idx.l);
    if (g.empty()) continue;
    const std::int64_t a = g.first() + idx.n * sys.N();
    const std::int64_t b = g.last() + idx.n * sys.N();
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  if (!any) return {};
  std::vector<cplx> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [idx, c] : coeffs) {
    if (idx.m < 0 || idx.m >= sys.M()) {
      throw Error(ErrorKind::InvalidAtom, "modulation index out of range");
    }
    const Window& g = sys.window(idx.l);
    for (std::int64_t i = 0; i < g.size(); ++i) {
      const std::int64_t j = g.first() + i + idx.n * sys.N();
      acc[static_cast<std::size_t>(j - lo)] +=
          c * unit_root(idx.m * j, sys.M()) * g.values()[static_cast<std::size_t>(i)];
    }
  }
  return Window(lo, std::move(acc));
}

double coefficient_energy(const Coefficients& coeffs) {
  double s = 0.0;
  for (const auto& [idx, c] : coeffs) s += std::norm(c);
  return s;
}

}  // namespace gabor
