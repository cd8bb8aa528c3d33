#include "gabor/zak.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

cplx zak_point(const Window& f, std::int64_t M, std::int64_t j, double theta) {
  if (M < 1) throw Error(ErrorKind::ParameterMismatch, "M must be positive");
  if (f.empty()) return {};
  cplx acc{};
  const std::int64_t k_lo = div_ceil(f.first() - j, M);
  const std::int64_t k_hi = div_floor(f.last() - j, M);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const cplx v = f(j + k * M);
    if (v != cplx{}) acc += v * unit_phase(static_cast<double>(k) * theta);
  }
  return acc;
}

ZakGrid::ZakGrid(std::int64_t M, std::int64_t T, std::vector<cplx> samples)
    : M_(M), T_(T), samples_(std::move(samples)) {
  if (samples_.size() != static_cast<std::size_t>(M_ * T_)) {
    throw Error(ErrorKind::DimensionMismatch, "Zak grid sample count mismatch");
  }
}

ZakGrid zak_grid(const Window& f, std::int64_t M, std::int64_t T) {
  if (M < 1 || T < 1) throw Error(ErrorKind::ParameterMismatch, "M and T must be positive");
  std::vector<cplx> samples(static_cast<std::size_t>(M * T));
  if (!f.empty()) {
    for (std::int64_t j = 0; j < M; ++j) {
      const std::int64_t k_lo = div_ceil(f.first() - j, M);
      const std::int64_t k_hi = div_floor(f.last() - j, M);
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const cplx v = f(j + k * M);
        if (v == cplx{}) continue;
        for (std::int64_t t = 0; t < T; ++t) {
          samples[static_cast<std::size_t>(j * T + t)] += v * unit_root(k * t, T);
        }
      }
    }
  }
  return ZakGrid(M, T, std::move(samples));
}

std::int64_t zak_k_span(const Window& f, std::int64_t M) {
  if (f.empty()) return 0;
  std::int64_t span = 0;
  for (std::int64_t j = 0; j < M; ++j) {
    span = std::max(span, div_floor(f.last() - j, M) - div_ceil(f.first() - j, M) + 1);
  }
  return span;
}

std::int64_t default_grid(const GaborSystem& sys) {
  std::int64_t span = 0;
  for (const auto& g : sys.windows()) span = std::max(span, zak_k_span(g, sys.M()));
  return std::max<std::int64_t>(64, 4 * span + 1);
}

std::vector<double> zak_energy(const GaborSystem& sys, std::int64_t T) {
  const std::int64_t M = sys.M();
  std::vector<double> energy(static_cast<std::size_t>(M * T));
  for (const auto& g : sys.windows()) {
    const auto grid = zak_grid(g, M, T);
    for (std::int64_t j = 0; j < M; ++j) {
      for (std::int64_t t = 0; t < T; ++t) {
        energy[static_cast<std::size_t>(j * T + t)] += std::norm(grid(j, t));
      }
    }
  }
  return energy;
}

namespace {

void require_NM(const GaborSystem& sys) {
  if (sys.N() != sys.M()) {
    throw Error(ErrorKind::ShapeViolation, "requires N = M (got M = " + std::to_string(sys.M()) +
                                               ", N = " + std::to_string(sys.N()) + ")");
  }
}

void require_integers(const GaborSystem& sys) {
  if (!sys.set().is_integers()) {
    throw Error(ErrorKind::UnsupportedSet, "requires the periodic set to be all of Z");
  }
}

std::pair<double, double> extrema(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

}  // namespace

ZakFrameEstimate frame_check_NM(const GaborSystem& sys, std::int64_t T, double tol) {
  require_NM(sys);
  require_integers(sys);
  if (T < 1) throw Error(ErrorKind::GridTooCoarse, "grid size must be positive");
  const double M = static_cast<double>(sys.M());
  ZakFrameEstimate out;
  out.grid = T;
  const auto [lo, hi] = extrema(zak_energy(sys, T));
  const auto [lo2, hi2] = extrema(zak_energy(sys, 2 * T));
  out.A_est = M * lo;
  out.B_est = M * hi;
  out.refined_A = M * lo2;
  out.refined_B = M * hi2;
  out.is_frame = out.A_est > tol && out.refined_A > tol;
  return out;
}

bool completeness_check_NM(const GaborSystem& sys) {
  require_NM(sys);
  const std::int64_t M = sys.M();
  std::vector<bool> covered(static_cast<std::size_t>(M), false);
  for (const auto& g : sys.windows()) {
    for (std::int64_t i = 0; i < g.size(); ++i) {
      if (g.values()[static_cast<std::size_t>(i)] != cplx{}) {
        covered[static_cast<std::size_t>(mod_floor(g.first() + i, M))] = true;
      }
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool common_zero_check(const GaborSystem& sys, std::int64_t T, double tol) {
  require_NM(sys);
  if (T < 1) throw Error(ErrorKind::GridTooCoarse, "grid size must be positive");
  const bool coarse = extrema(zak_energy(sys, T)).first > tol;
  const bool fine = extrema(zak_energy(sys, 2 * T)).first > tol;
  // the 2T grid contains the T grid, so only "coarse clean, fine dirty" can disagree
  return coarse && fine;
}

bool necessary_check_NLM(const GaborSystem& sys, double A, double B, std::int64_t T, double tol) {
  if (sys.N() != sys.L() * sys.M()) {
    throw Error(ErrorKind::ShapeViolation, "requires N = LM");
  }
  require_integers(sys);
  const double L = static_cast<double>(sys.L());
  const double M = static_cast<double>(sys.M());
  const auto energy = zak_energy(sys, T);
  return std::all_of(energy.begin(), energy.end(), [&](double e) {
    return L * A / M - tol <= e && e <= L * B / M + tol;
  });
}

bool is_odd(const Window& f) {
  if (f.empty()) return true;
  if (f.first() != -f.last()) return false;
  for (std::int64_t k = 0; k <= f.last(); ++k) {
    if (f(-k) != -f(k)) return false;
  }
  return true;
}

bool is_even(const Window& f) {
  if (f.empty()) return true;
  if (f.first() != -f.last()) return false;
  for (std::int64_t k = 1; k <= f.last(); ++k) {
    if (f(-k) != f(k)) return false;
  }
  return true;
}

std::vector<ZakZero> symmetry_zeros(const Window& f, std::int64_t M) {
  std::vector<ZakZero> out;
  auto add = [&](std::int64_t j, double theta) {
    const double mag = std::abs(zak_point(f, M, j, theta));
    if (mag > 1e-12) {
      throw Error(ErrorKind::FormDisagreement, "symmetry zero at (" + std::to_string(j) + ", " +
                                                   std::to_string(theta) + ") has |z| = " +
                                                   std::to_string(mag));
    }
    out.push_back({j, theta, mag});
  };
  if (is_odd(f)) {
    add(0, 0.0);
    add(0, 0.5);
    if (M % 2 == 0) add(M / 2, 0.0);
  }
  if (is_even(f) && M % 2 == 0) add(M / 2, 0.5);
  return out;
}

double zak_unitarity_residual(const Window& f, std::int64_t M, std::int64_t T) {
  const std::int64_t span = zak_k_span(f, M);
  if (T < 2 * span + 1) {
    throw Error(ErrorKind::GridTooCoarse, "grid " + std::to_string(T) + " below exactness threshold " +
                                              std::to_string(2 * span + 1));
  }
  const auto grid = zak_grid(f, M, T);
  double total = 0.0;
  for (std::int64_t j = 0; j < M; ++j) {
    double row = 0.0;
    for (std::int64_t t = 0; t < T; ++t) row += std::norm(grid(j, t));
    total += row / static_cast<double>(T);
  }
  return std::abs(total - f.norm_squared());
}

Window truncated_gaussian(double r, double tail_tol) {
  if (!(r > 0.0)) throw Error(ErrorKind::ParameterMismatch, "Gaussian rate must be positive");
  // energy of the tail beyond radius R: 2 Σ_{k>R} e^{−2rk²}
  auto tail = [r](std::int64_t R) {
    double s = 0.0;
    for (std::int64_t k = R + 1;; ++k) {
      const double term = std::exp(-2.0 * r * static_cast<double>(k * k));
      s += term;
      if (term < 1e-300 || term < s * 1e-17) break;
    }
    return 2.0 * s;
  };
  double total = 1.0 + tail(0);
  std::int64_t R = 0;
  while (tail(R) >= tail_tol * total) ++R;
  std::vector<cplx> values;
  for (std::int64_t k = -R; k <= R; ++k) values.emplace_back(std::exp(-r * static_cast<double>(k * k)));
  return Window(-R, std::move(values));
}

}  // namespace gabor
