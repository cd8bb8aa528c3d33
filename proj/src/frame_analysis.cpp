#include "gabor/frame_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

namespace {

double row_abs_sum(const CorrelationTable& t, std::int64_t j, bool skip_diagonal) {
  double s = 0.0;
  for (std::int64_t k = -t.band_radius(); k <= t.band_radius(); ++k) {
    if (skip_diagonal && k == 0) continue;
    s += std::abs(t(k, j));
  }
  return s;
}

bool identity_pattern(const CorrelationTable& t, double tol) {
  const double target = 1.0 / static_cast<double>(t.M());
  for (auto j : t.rows()) {
    if (std::abs(t(0, j) - target) > tol) return false;
    for (std::int64_t k = -t.band_radius(); k <= t.band_radius(); ++k) {
      if (k != 0 && std::abs(t(k, j)) > tol) return false;
    }
  }
  return true;
}

void require_narrow(const CorrelationTable& t) {
  if (t.support_width() >= t.M()) {
    throw Error(ErrorKind::SupportTooWide, "window support width " +
                                               std::to_string(t.support_width()) +
                                               " is not below M = " + std::to_string(t.M()));
  }
}

}  // namespace

SufficientBounds sufficient_bounds(const CorrelationTable& t) {
  const double M = static_cast<double>(t.M());
  SufficientBounds out;
  bool first = true;
  for (auto j : t.rows()) {
    const double upper = row_abs_sum(t, j, false);
    const double lower = t(0, j).real() - row_abs_sum(t, j, true);
    out.B = first ? upper : std::max(out.B, upper);
    out.A = first ? lower : std::min(out.A, lower);
    first = false;
  }
  out.A *= M;
  out.B *= M;
  out.is_bessel = std::isfinite(out.B);
  out.is_frame = out.A > 0.0;
  return out;
}

bool necessary_diagonal_check(const CorrelationTable& t, double A, double B, double tol) {
  const double M = static_cast<double>(t.M());
  return std::all_of(t.rows().begin(), t.rows().end(), [&](std::int64_t j) {
    const double d = t(0, j).real();
    return A / M - tol <= d && d <= B / M + tol;
  });
}

bool parseval_check(const CorrelationTable& t, double tol) { return identity_pattern(t, tol); }

bool dual_check(const CorrelationTable& tc, double tol) { return identity_pattern(tc, tol); }

DensityVerdict density_and_riesz(const GaborSystem& sys, bool is_frame) {
  const std::int64_t LM = sys.L() * sys.M();
  return {sys.card_SN() <= LM, is_frame && sys.card_SN() == LM};
}

bool orthonormal_check(const GaborSystem& sys, const CorrelationTable& t, double tol) {
  const bool parseval = parseval_check(t, tol);
  const bool by_density = parseval && sys.card_SN() == sys.L() * sys.M();
  const bool by_norms =
      parseval && std::all_of(sys.windows().begin(), sys.windows().end(),
                              [tol](const Window& g) { return std::abs(g.norm_squared() - 1.0) <= tol; });
  if (by_density != by_norms) {
    throw Error(ErrorKind::FormDisagreement,
                "orthonormality forms disagree (density form " + std::to_string(by_density) +
                    ", unit-norm form " + std::to_string(by_norms) + ")");
  }
  return by_density;
}

NarrowBounds narrow_support_frame(const CorrelationTable& t) {
  require_narrow(t);
  const double M = static_cast<double>(t.M());
  NarrowBounds out;
  bool first = true;
  for (auto j : t.rows()) {
    const double d = M * t(0, j).real();
    out.A = first ? d : std::min(out.A, d);
    out.B = first ? d : std::max(out.B, d);
    first = false;
  }
  out.is_frame = out.A > 0.0;
  return out;
}

Window apply_frame_operator(const CorrelationTable& tc, const Window& f) {
  if (f.empty()) return {};
  const std::int64_t M = tc.M();
  const std::int64_t R = tc.band_radius();
  const std::int64_t lo = f.first() - R * M;
  const std::int64_t hi = f.last() + R * M;
  std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) {
    if (!tc.set().contains(j)) continue;
    cplx acc{};
    for (std::int64_t k = -R; k <= R; ++k) acc += tc(k, j) * f(j + k * M);
    out[static_cast<std::size_t>(j - lo)] = static_cast<double>(M) * acc;
  }
  return Window(lo, std::move(out));
}

Window apply_inverse_frame_operator_narrow(const CorrelationTable& t, const Window& f) {
  require_narrow(t);
  for (auto j : t.rows()) {
    if (t(0, j).real() <= 0.0) {
      throw Error(ErrorKind::SingularDiagonal,
                  "G_0(" + std::to_string(j) + ") = " + std::to_string(t(0, j).real()));
    }
  }
  if (f.empty()) return {};
  const double M = static_cast<double>(t.M());
  std::vector<cplx> out(f.values());
  for (std::int64_t i = 0; i < f.size(); ++i) {
    const std::int64_t j = f.first() + i;
    auto& v = out[static_cast<std::size_t>(i)];
    v = t.set().contains(j) ? v / (M * t(0, j).real()) : cplx{};
  }
  return Window(f.first(), std::move(out));
}

double perturbation_radius(const GaborSystem& sys_g, const GaborSystem& sys_h) {
  if (!sys_g.same_shape(sys_h)) {
    throw Error(ErrorKind::ParameterMismatch, "perturbed system differs in (L, M, N, S)");
  }
  std::vector<Window> diff;
  diff.reserve(static_cast<std::size_t>(sys_g.L()));
  for (std::int64_t l = 0; l < sys_g.L(); ++l) diff.push_back(sys_g.window(l) - sys_h.window(l));
  const auto t = autocorrelation_table(sys_g.with_windows(std::move(diff)));
  double R = 0.0;
  for (auto j : t.rows()) R = std::max(R, row_abs_sum(t, j, false));
  return static_cast<double>(t.M()) * R;
}

std::optional<PerturbationBounds> perturbation_bound(const GaborSystem& sys_g,
                                                     const GaborSystem& sys_h, double A, double B) {
  const double R = perturbation_radius(sys_g, sys_h);
  if (!(R < A)) return std::nullopt;
  const double lower = 1.0 - std::sqrt(R / A);
  const double upper = 1.0 + std::sqrt(R / B);
  return PerturbationBounds{A * lower * lower, B * upper * upper, R};
}

Window random_signal(const PeriodicSet& set, std::int64_t support_radius, std::uint64_t seed) {
  std::vector<std::int64_t> points;
  for (std::int64_t j = -support_radius; j <= support_radius; ++j) {
    if (set.contains(j)) points.push_back(j);
  }
  if (points.empty()) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> count_dist(1, points.size());
  const std::size_t count = count_dist(rng);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(count);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> values(static_cast<std::size_t>(2 * support_radius + 1));
  for (auto j : points) {
    const double re = normal(rng);
    const double im = normal(rng);
    values[static_cast<std::size_t>(j + support_radius)] = {re, im};
  }
  return Window(-support_radius, std::move(values));
}

RayleighBounds randomized_rayleigh_bounds(const GaborSystem& sys, std::int64_t trials,
                                          std::int64_t support_radius, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::ParameterMismatch, "trials must be positive");
  RayleighBounds out;
  bool first = true;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::uint64_t derived = 0;
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    derived = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
    const Window f = random_signal(sys.set(), support_radius, derived);
    const double norm2 = f.norm_squared();
    if (norm2 == 0.0) continue;
    const double ratio = coefficient_energy(analysis_coefficients(sys, f)) / norm2;
    out.min_ratio = first ? ratio : std::min(out.min_ratio, ratio);
    out.max_ratio = first ? ratio : std::max(out.max_ratio, ratio);
    first = false;
    ++out.trials;
  }
  return out;
}

// Exact mode -----------------------------------------------------------------

namespace {

using GaussInt = std::pair<std::int64_t, std::int64_t>;

std::optional<std::int64_t> lift_component(double x, double root) {
  const double scaled = std::round(x * root);
  if (std::abs(scaled) > 1e15) return std::nullopt;
  const auto a = static_cast<std::int64_t>(scaled);
  if (static_cast<double>(a) / root != x) return std::nullopt;
  return a;
}

}  // namespace

std::optional<ExactTable> exact_autocorrelation(const GaborSystem& sys, std::int64_t d) {
  if (d < 1) return std::nullopt;
  const double root = std::sqrt(static_cast<double>(d));
  // lattice copy of each window: integer pairs on the same support
  std::vector<std::vector<GaussInt>> lifted(static_cast<std::size_t>(sys.L()));
  for (std::int64_t l = 0; l < sys.L(); ++l) {
    for (const auto& v : sys.window(l).values()) {
      const auto re = lift_component(v.real(), root);
      const auto im = lift_component(v.imag(), root);
      if (!re || !im) return std::nullopt;
      lifted[static_cast<std::size_t>(l)].emplace_back(*re, *im);
    }
  }
  const auto t = autocorrelation_table(sys);
  ExactTable out;
  out.M = sys.M();
  out.denominator = d;
  out.band_radius = t.band_radius();
  out.rows = t.rows();
  const std::int64_t M = sys.M(), N = sys.N(), R = t.band_radius();
  auto value = [&](std::int64_t l, std::int64_t j) -> GaussInt {
    const Window& g = sys.window(l);
    if (g.empty() || j < g.first() || j > g.last()) return {0, 0};
    return lifted[static_cast<std::size_t>(l)][static_cast<std::size_t>(j - g.first())];
  };
  for (auto j : out.rows) {
    for (std::int64_t k = -R; k <= R; ++k) {
      GaussInt acc{0, 0};
      for (std::int64_t l = 0; l < sys.L(); ++l) {
        const Window& g = sys.window(l);
        if (g.empty()) continue;
        const std::int64_t n_lo = div_ceil(j - g.last(), N);
        const std::int64_t n_hi = div_floor(j - g.first(), N);
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
          const auto [a, b] = value(l, j - n * N);
          const auto [c, e] = value(l, j + k * M - n * N);
          // (a + ib)(c − ie)
          acc.first += a * c + b * e;
          acc.second += b * c - a * e;
        }
      }
      out.numerators.push_back(acc);
    }
  }
  return out;
}

bool parseval_check_exact(const ExactTable& t) {
  const std::size_t stride = static_cast<std::size_t>(2 * t.band_radius + 1);
  for (std::size_t row = 0; row < t.rows.size(); ++row) {
    for (std::int64_t k = -t.band_radius; k <= t.band_radius; ++k) {
      const auto [re, im] = t.numerators[row * stride + static_cast<std::size_t>(k + t.band_radius)];
      if (im != 0) return false;
      // G_0 = re/d must equal 1/M, i.e. re·M = d
      if (k == 0 ? re * t.M != t.denominator : re != 0) return false;
    }
  }
  return true;
}

std::optional<bool> parseval_check_exact(const GaborSystem& sys) {
  for (std::int64_t d : {sys.M(), std::int64_t{1}}) {
    if (auto t = exact_autocorrelation(sys, d)) return parseval_check_exact(*t);
  }
  return std::nullopt;
}

std::optional<bool> orthonormal_check_exact(const GaborSystem& sys) {
  const auto parseval = parseval_check_exact(sys);
  if (!parseval) return std::nullopt;
  return *parseval && sys.card_SN() == sys.L() * sys.M();
}

FrameReport analyze(const GaborSystem& sys, double tol) {
  const auto t = autocorrelation_table(sys);
  FrameReport r;
  r.tol = tol;
  const auto suff = sufficient_bounds(t);
  r.bessel_bound = suff.B;
  r.is_bessel = suff.is_bessel;
  r.is_frame_sufficient = suff.is_frame;
  if (suff.is_frame) r.lower_bound = suff.A;
  r.is_parseval = parseval_check(t, tol);
  if (t.support_width() < t.M()) r.narrow = narrow_support_frame(t);
  const bool is_frame = suff.is_frame || r.is_parseval || (r.narrow && r.narrow->is_frame);
  const auto density = density_and_riesz(sys, is_frame);
  r.density_ok = density.density_ok;
  r.is_riesz = density.is_riesz;
  r.is_orthonormal = orthonormal_check(sys, t, tol);
  r.card_SN = sys.card_SN();
  r.LM = sys.L() * sys.M();
  return r;
}

}  // namespace gabor
