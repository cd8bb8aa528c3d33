#include "gabor/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gabor/constructor.hpp"
#include "gabor/error.hpp"
#include "gabor/io.hpp"

namespace gabor::cli {

namespace {

using io::json;

struct Options {
  double tol = kDefaultTol;
  std::int64_t grid = 0;
  std::int64_t trials = 200;
  std::uint64_t seed = 0;
  std::int64_t radius = 8;
  std::int64_t periods = 1;
  std::string format;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "Tolerance for equality-type checks")->check(CLI::NonNegativeNumber);
  cmd->add_option("--grid", o.grid, "Zak grid size T (0 = automatic)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--trials", o.trials, "Random trials for the Rayleigh oracle")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  cmd->add_option("--radius", o.radius, "Support radius of random test signals")->check(CLI::PositiveNumber);
  cmd->add_option("--periods", o.periods, "Finite model size as a multiple of lcm(M, N)")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(22) << key << value << '\n';
}

json oracle_json(const RayleighBounds& rb, const Options& o) {
  return {{"min_ratio", rb.min_ratio}, {"max_ratio", rb.max_ratio}, {"trials", rb.trials},
          {"seed", o.seed},            {"radius", o.radius}};
}

int cmd_analyze(const std::string& path, const Options& o, std::ostream& out) {
  const GaborSystem sys = io::load_system(path);
  const auto table = autocorrelation_table(sys);
  if (o.format == "csv") {
    table.write_csv(out);
    return kOk;
  }
  const FrameReport report = analyze(sys, o.tol);
  const auto exact = parseval_check_exact(sys);
  const auto rb = randomized_rayleigh_bounds(sys, o.trials, o.radius, o.seed);
  const auto model = build_model(sys, o.periods);
  const auto spectral = spectral_frame_bounds(model);
  if (o.format == "json") {
    json j = io::to_json(report);
    j["parseval_exact"] = exact ? json(*exact) : json(nullptr);
    j["oracle"] = oracle_json(rb, o);
    j["spectral"] = {{"A", spectral.A}, {"B", spectral.B}, {"P", model.P()},
                     {"scope", "in finite model P=" + std::to_string(model.P())}};
    j["seed"] = o.seed;
    print_json(out, j);
    return kOk;
  }
  row(out, "system", "L=" + std::to_string(sys.L()) + " M=" + std::to_string(sys.M()) +
                         " N=" + std::to_string(sys.N()) + " card(S_N)=" + std::to_string(report.card_SN) +
                         " LM=" + std::to_string(report.LM));
  row(out, "bessel bound B", fmt(*report.bessel_bound));
  row(out, "lower bound A", report.lower_bound ? fmt(*report.lower_bound) : "inconclusive");
  if (report.narrow) {
    row(out, "narrow bounds", "(" + fmt(report.narrow->A) + ", " + fmt(report.narrow->B) + ")");
  }
  row(out, "bessel", yes_no(report.is_bessel));
  row(out, "frame (sufficient)", yes_no(report.is_frame_sufficient));
  row(out, "parseval", yes_no(report.is_parseval));
  row(out, "parseval (exact)", exact ? yes_no(*exact) : "not applicable");
  row(out, "riesz", yes_no(report.is_riesz));
  row(out, "orthonormal", yes_no(report.is_orthonormal));
  row(out, "density ok", yes_no(report.density_ok));
  row(out, "oracle ratios", "[" + fmt(rb.min_ratio) + ", " + fmt(rb.max_ratio) + "] (" +
                                std::to_string(rb.trials) + " trials, seed " + std::to_string(o.seed) + ")");
  row(out, "spectral bounds", "(" + fmt(spectral.A) + ", " + fmt(spectral.B) + ") in finite model P=" +
                                  std::to_string(model.P()));
  return kOk;
}

int cmd_construct(const std::string& kind, std::int64_t L, std::int64_t M, std::int64_t N,
                  std::ostream& out) {
  const GaborSystem sys = kind == "parseval" ? construct_parseval(L, M, N) : construct_orthonormal(L, M, N);
  print_json(out, io::to_json(sys));
  return kOk;
}

struct ZakFlags {
  bool check_frame = false;
  bool symmetry = false;
  std::optional<double> riesz_A;
  std::optional<double> riesz_B;
};

int cmd_zak(const std::string& path, const ZakFlags& flags, const Options& o, std::ostream& out) {
  const GaborSystem sys = io::load_system(path);
  const std::int64_t T = o.grid > 0 ? o.grid : default_grid(sys);
  const bool verdicts = flags.check_frame || flags.symmetry || flags.riesz_A;
  if (!verdicts) {
    if (o.format == "json") {
      json grids = json::array();
      for (const auto& g : sys.windows()) {
        const auto grid = zak_grid(g, sys.M(), T);
        json rows = json::array();
        for (std::int64_t j = 0; j < sys.M(); ++j) {
          json r = json::array();
          for (std::int64_t t = 0; t < T; ++t) r.push_back(json::array({grid(j, t).real(), grid(j, t).imag()}));
          rows.push_back(r);
        }
        grids.push_back(rows);
      }
      print_json(out, {{"M", sys.M()}, {"T", T}, {"samples", grids}});
      return kOk;
    }
    // CSV v1: l,j,theta,re,im,energy  (energy = Σ_l |z|² at (j, theta))
    const auto energy = zak_energy(sys, T);
    out << "# gabor-zak-csv v1\n" << "l,j,theta,re,im,energy\n";
    out << std::setprecision(17);
    for (std::int64_t l = 0; l < sys.L(); ++l) {
      const auto grid = zak_grid(sys.window(l), sys.M(), T);
      for (std::int64_t j = 0; j < sys.M(); ++j) {
        for (std::int64_t t = 0; t < T; ++t) {
          out << l << ',' << j << ',' << grid.theta(t) << ',' << grid(j, t).real() << ','
              << grid(j, t).imag() << ',' << energy[static_cast<std::size_t>(j * T + t)] << '\n';
        }
      }
    }
    return kOk;
  }

  json j = {{"grid", T}};
  if (flags.check_frame) {
    const auto est = frame_check_NM(sys, T, o.tol);
    j["frame"] = io::to_json(est);
    j["complete"] = completeness_check_NM(sys);
    j["no_common_zero"] = common_zero_check(sys, T, o.tol);
  }
  if (flags.riesz_A) {
    j["riesz_necessary"] = necessary_check_NLM(sys, *flags.riesz_A, flags.riesz_B.value_or(*flags.riesz_A), T, o.tol);
  }
  if (flags.symmetry) {
    json zeros = json::array();
    for (const auto& g : sys.windows()) {
      json w = json::array();
      for (const auto& z : symmetry_zeros(g, sys.M())) {
        w.push_back({{"j", z.j}, {"theta", z.theta}, {"magnitude", z.magnitude}});
      }
      zeros.push_back(w);
    }
    j["symmetry_zeros"] = zeros;
  }
  if (o.format == "json") {
    print_json(out, j);
    return kOk;
  }
  row(out, "grid T", std::to_string(T));
  if (flags.check_frame) {
    const auto& f = j["frame"];
    row(out, "A_est", fmt(f["A_est"].get<double>()));
    row(out, "B_est", fmt(f["B_est"].get<double>()));
    row(out, "refined (2T)", "(" + fmt(f["refined_A"].get<double>()) + ", " + fmt(f["refined_B"].get<double>()) + ")");
    row(out, "frame", yes_no(f["is_frame"].get<bool>()));
    row(out, "complete", yes_no(j["complete"].get<bool>()));
    row(out, "no common zero", yes_no(j["no_common_zero"].get<bool>()));
  }
  if (flags.riesz_A) row(out, "riesz necessary", yes_no(j["riesz_necessary"].get<bool>()));
  if (flags.symmetry) {
    for (std::size_t l = 0; l < j["symmetry_zeros"].size(); ++l) {
      std::string s;
      for (const auto& z : j["symmetry_zeros"][l]) {
        s += "(" + std::to_string(z["j"].get<std::int64_t>()) + ", " + fmt(z["theta"].get<double>()) + ") ";
      }
      row(out, "zeros of g_" + std::to_string(l), s.empty() ? "none forced" : s);
    }
  }
  return kOk;
}

int cmd_perturb(const std::string& g_path, const std::string& h_path, double A, double B,
                const Options& o, std::ostream& out) {
  const GaborSystem g = io::load_system(g_path);
  const GaborSystem h = io::load_system(h_path);
  const double R = perturbation_radius(g, h);
  const auto bounds = perturbation_bound(g, h, A, B);
  const auto rb = randomized_rayleigh_bounds(h, o.trials, o.radius, o.seed);
  if (o.format == "json") {
    json j = {{"R", R}, {"A", A}, {"B", B}, {"oracle", oracle_json(rb, o)}, {"seed", o.seed}};
    if (bounds) {
      j["bounds"] = {{"A", bounds->A}, {"B", bounds->B}};
    } else {
      j["bounds"] = nullptr;
    }
    print_json(out, j);
    return kOk;
  }
  row(out, "R", fmt(R));
  row(out, "perturbed bounds", bounds ? "(" + fmt(bounds->A) + ", " + fmt(bounds->B) + ")" : "inconclusive (R >= A)");
  row(out, "oracle ratios", "[" + fmt(rb.min_ratio) + ", " + fmt(rb.max_ratio) + "] (" +
                                std::to_string(rb.trials) + " trials, seed " + std::to_string(o.seed) + ")");
  return kOk;
}

double reconstruction_error(const GaborSystem& g, const GaborSystem& h, const Options& o) {
  double worst = 0.0;
  for (std::int64_t t = 0; t < o.trials; ++t) {
    const Window f = random_signal(g.set(), o.radius, o.seed + static_cast<std::uint64_t>(t));
    const Window rebuilt = synthesis(h, analysis_coefficients(g, f));
    worst = std::max(worst, max_abs_diff(rebuilt, f));
  }
  return worst;
}

int cmd_dual(const std::string& g_path, const std::string& h_path, bool complete, const Options& o,
             std::ostream& out) {
  GaborSystem g = io::load_system(g_path);
  GaborSystem h = io::load_system(h_path);
  if (complete) std::tie(g, h) = dual_completion(g, h);
  const bool dual = dual_check(cross_correlation_table(g, h), o.tol);
  const double err = reconstruction_error(g, h, o);
  if (o.format == "json") {
    json j = {{"dual", dual}, {"reconstruction_error", err}, {"trials", o.trials}, {"seed", o.seed}};
    if (complete) {
      j["g"] = io::to_json(g);
      j["h"] = io::to_json(h);
    }
    print_json(out, j);
    return kOk;
  }
  row(out, "dual", yes_no(dual));
  row(out, "reconstruction error", fmt(err) + " (" + std::to_string(o.trials) + " trials, seed " +
                                       std::to_string(o.seed) + ")");
  if (complete) {
    row(out, "completed windows", std::to_string(g.L()));
  }
  return kOk;
}

int cmd_oracle(const std::string& path, const Options& o, std::ostream& out) {
  const GaborSystem sys = io::load_system(path);
  const auto rb = randomized_rayleigh_bounds(sys, o.trials, o.radius, o.seed);
  if (o.format == "json") {
    print_json(out, oracle_json(rb, o));
    return kOk;
  }
  row(out, "min ratio", fmt(rb.min_ratio));
  row(out, "max ratio", fmt(rb.max_ratio));
  row(out, "trials", std::to_string(rb.trials) + " (seed " + std::to_string(o.seed) + ")");
  return kOk;
}

int cmd_kframe(const std::string& path, const std::string& k_path, const std::string& range_path,
               const Options& o, std::ostream& out) {
  const GaborSystem sys = io::load_system(path);
  const FiniteModel model = build_model(sys, o.periods);
  KOperator K{Matrix::Identity(model.P(), model.P())};
  std::string k_source = "identity";
  if (!k_path.empty()) {
    const json kj = io::read_json_file(k_path);
    try {
      K = io::operator_from_json(kj);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Schema, k_path + ": " + e.what());
    }
    k_source = k_path;
  } else if (!range_path.empty()) {
    const FiniteModel other = build_model(io::load_system(range_path), o.periods);
    if (other.P() != model.P()) {
      throw Error(ErrorKind::DimensionMismatch, "range system yields a different model size");
    }
    K.matrix = range_projector(other.synthesis());
    k_source = "projector onto range of " + range_path;
  }
  const auto verdict = kframe_verdict(model, K);
  json j = io::to_json(verdict);
  j["K"] = k_source;
  j["douglas_residual"] = douglas_residual(model, K);
  j["k_minimal"] = k_minimality_check(model);
  j["wraps"] = model.wraps();
  j["seed"] = o.seed;
  if (verdict.is_kframe) {
    const Matrix duals = k_dual_minimal_norm(model, K);
    j["k_dual_reconstruction_error"] = k_dual_reconstruction_error(model, K, duals, 20, o.seed);
  }
  if (o.format == "text") {
    row(out, "scope", j["scope"].get<std::string>());
    row(out, "K", k_source);
    row(out, "K-frame", yes_no(verdict.is_kframe));
    row(out, "A_opt", verdict.A_opt ? fmt(*verdict.A_opt) : "absent");
    row(out, "B", fmt(verdict.B));
    row(out, "K-minimal", yes_no(j["k_minimal"].get<bool>()));
    return kOk;
  }
  print_json(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gaborctl: frame analysis of multi-window discrete Gabor systems", "gaborctl"};
  app.require_subcommand(1);
  Options o;
  std::string path, path2, kind, k_path, range_path;
  std::int64_t L = 0, M = 0, N = 0;
  double A = 0.0, B = 0.0;
  bool complete = false;
  ZakFlags zf;

  auto* analyze_cmd = app.add_subcommand("analyze", "Frame verdicts and bounds from the correlation table");
  analyze_cmd->add_option("system", path, "System JSON")->required();
  add_common(analyze_cmd, o);

  auto* construct_cmd = app.add_subcommand("construct", "Build a Parseval frame or orthonormal basis");
  construct_cmd->add_option("kind", kind, "parseval | onb")->required()->check(CLI::IsMember({"parseval", "onb"}));
  construct_cmd->add_option("--L", L)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--M", M)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("--N", N)->required()->check(CLI::PositiveNumber);
  add_common(construct_cmd, o);

  auto* zak_cmd = app.add_subcommand("zak", "Zak transform grid (CSV) and Zak-domain checks");
  zak_cmd->add_option("system", path, "System JSON")->required();
  zak_cmd->add_flag("--check-frame", zf.check_frame, "Frame, completeness and common-zero checks (N = M)");
  zak_cmd->add_flag("--symmetry", zf.symmetry, "List zeros forced by odd/even windows");
  auto* ra = zak_cmd->add_option("--riesz-A", A, "Lower bound for the N = LM necessary check");
  auto* rb = zak_cmd->add_option("--riesz-B", B, "Upper bound for the N = LM necessary check");
  rb->needs(ra);
  add_common(zak_cmd, o);

  auto* perturb_cmd = app.add_subcommand("perturb", "Frame bounds of a perturbed system");
  perturb_cmd->add_option("system", path, "Reference system JSON")->required();
  perturb_cmd->add_option("perturbed", path2, "Perturbed system JSON")->required();
  perturb_cmd->add_option("--A", A, "Lower frame bound of the reference")->required();
  perturb_cmd->add_option("--B", B, "Upper frame bound of the reference")->required();
  add_common(perturb_cmd, o);

  auto* dual_cmd = app.add_subcommand("dual", "Dual-pair check (optionally after completion)");
  dual_cmd->add_option("analysis", path, "Analysis system JSON (g)")->required();
  dual_cmd->add_option("synthesis", path2, "Synthesis system JSON (h)")->required();
  dual_cmd->add_flag("--complete", complete, "Append windows so the pair becomes dual");
  add_common(dual_cmd, o);

  auto* oracle_cmd = app.add_subcommand("oracle", "Randomized Rayleigh-quotient bounds");
  oracle_cmd->add_option("system", path, "System JSON")->required();
  add_common(oracle_cmd, o);

  auto* kframe_cmd = app.add_subcommand("kframe", "K-frame verdict in the finite periodized model");
  kframe_cmd->add_option("system", path, "System JSON")->required();
  auto* kopt = kframe_cmd->add_option("--K", k_path, "K operator JSON (default: identity)");
  kframe_cmd->add_option("--k-range", range_path, "Use K = projector onto the range of this system")->excludes(kopt);
  add_common(kframe_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error kind=Usage message=" << e.what() << '\n';
    return kSchemaError;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (o.format.empty()) o.format = "text";
      return cmd_analyze(path, o, out);
    }
    if (construct_cmd->parsed()) return cmd_construct(kind, L, M, N, out);
    if (zak_cmd->parsed()) {
      if (o.format.empty()) o.format = "csv";
      if (ra->count() > 0) {
        zf.riesz_A = A;
        if (rb->count() > 0) zf.riesz_B = B;
      }
      if ((zf.check_frame || zf.symmetry || zf.riesz_A) && o.format == "csv") o.format = "text";
      return cmd_zak(path, zf, o, out);
    }
    if (perturb_cmd->parsed()) {
      if (o.format.empty()) o.format = "text";
      return cmd_perturb(path, path2, A, B, o, out);
    }
    if (dual_cmd->parsed()) {
      if (o.format.empty()) o.format = "text";
      return cmd_dual(path, path2, complete, o, out);
    }
    if (oracle_cmd->parsed()) {
      if (o.format.empty()) o.format = "text";
      return cmd_oracle(path, o, out);
    }
    if (kframe_cmd->parsed()) {
      if (o.format.empty()) o.format = "json";
      return cmd_kframe(path, k_path, range_path, o, out);
    }
  } catch (const Error& e) {
    err << "error kind=" << to_string(e.kind()) << " message=" << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Schema:
      case ErrorKind::InvalidSet:
      case ErrorKind::InvalidWindow:
        return kSchemaError;
      default:
        return kPreconditionError;
    }
  }
  return kFailure;
}

}  // namespace gabor::cli
