#include "gabor/io.hpp"

#include <fstream>

#include "gabor/error.hpp"

namespace gabor::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Schema, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) schema_error(std::string("expected an object holding \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) schema_error(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t integer(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<std::int64_t>();
}

cplx complex_value(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    schema_error("complex values are [re, im] pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const PeriodicSet& s) { return {{"period", s.period()}, {"residues", s.residues()}}; }

json to_json(const Window& w) {
  json values = json::array();
  for (const auto& v : w.values()) values.push_back(complex_json(v));
  return {{"offset", w.offset()}, {"values", values}};
}

json to_json(const GaborSystem& sys) {
  json windows = json::array();
  for (const auto& g : sys.windows()) windows.push_back(to_json(g));
  return {{"L", sys.L()}, {"M", sys.M()}, {"N", sys.N()}, {"set", to_json(sys.set())},
          {"windows", windows}};
}

json to_json(const FrameReport& r) {
  json j = {{"bessel_bound", optional_json(r.bessel_bound)},
            {"lower_bound", optional_json(r.lower_bound)},
            {"is_bessel", r.is_bessel},
            {"is_frame_sufficient", r.is_frame_sufficient},
            {"is_parseval", r.is_parseval},
            {"is_riesz", r.is_riesz},
            {"is_orthonormal", r.is_orthonormal},
            {"density_ok", r.density_ok},
            {"card_SN", r.card_SN},
            {"LM", r.LM},
            {"tol", r.tol}};
  if (r.narrow) {
    j["narrow_support"] = {{"A", r.narrow->A}, {"B", r.narrow->B}, {"is_frame", r.narrow->is_frame}};
  } else {
    j["narrow_support"] = nullptr;
  }
  return j;
}

json to_json(const ZakFrameEstimate& z) {
  return {{"A_est", z.A_est},         {"B_est", z.B_est}, {"refined_A", z.refined_A},
          {"refined_B", z.refined_B}, {"grid", z.grid},   {"is_frame", z.is_frame}};
}

json to_json(const KFrameVerdict& v) {
  return {{"is_kframe", v.is_kframe}, {"A_opt", optional_json(v.A_opt)}, {"B", v.B},
          {"zero_operator", v.zero_operator}, {"P", v.P},
          {"scope", "in finite model P=" + std::to_string(v.P)}};
}

json to_json(const Matrix& K) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < K.rows(); ++r) {
    for (Eigen::Index c = 0; c < K.cols(); ++c) entries.push_back(complex_json(K(r, c)));
  }
  return {{"size", K.rows()}, {"entries", entries}};
}

PeriodicSet set_from_json(const json& j) {
  const std::int64_t period = integer(j, "period");
  const json& res = field(j, "residues");
  if (!res.is_array()) schema_error("\"residues\" must be an array");
  std::vector<std::int64_t> residues;
  for (const auto& r : res) {
    if (!r.is_number_integer()) schema_error("residues must be integers");
    residues.push_back(r.get<std::int64_t>());
  }
  return PeriodicSet::make(period, residues);
}

Window window_from_json(const json& j) {
  const std::int64_t offset = integer(j, "offset");
  const json& vals = field(j, "values");
  if (!vals.is_array()) schema_error("\"values\" must be an array");
  std::vector<cplx> values;
  values.reserve(vals.size());
  for (const auto& v : vals) values.push_back(complex_value(v));
  return Window(offset, std::move(values));
}

GaborSystem system_from_json(const json& j) {
  const std::int64_t L = integer(j, "L");
  const std::int64_t M = integer(j, "M");
  const std::int64_t N = integer(j, "N");
  PeriodicSet set = j.contains("set") && !j["set"].is_null() ? set_from_json(j["set"]) : PeriodicSet::integers();
  const json& ws = field(j, "windows");
  if (!ws.is_array()) schema_error("\"windows\" must be an array");
  if (static_cast<std::int64_t>(ws.size()) != L) {
    schema_error("L = " + std::to_string(L) + " but " + std::to_string(ws.size()) + " windows given");
  }
  std::vector<Window> windows;
  for (const auto& w : ws) windows.push_back(window_from_json(w));
  return GaborSystem(M, N, std::move(set), std::move(windows));
}

KOperator operator_from_json(const json& j) {
  const std::int64_t P = integer(j, "size");
  const json& entries = field(j, "entries");
  if (P < 1 || !entries.is_array() || static_cast<std::int64_t>(entries.size()) != P * P) {
    schema_error("K needs size² row-major entries");
  }
  Matrix K(P, P);
  for (std::int64_t r = 0; r < P; ++r) {
    for (std::int64_t c = 0; c < P; ++c) K(r, c) = complex_value(entries[static_cast<std::size_t>(r * P + c)]);
  }
  return {K};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    schema_error(path.string() + ": " + e.what());
  }
}

GaborSystem load_system(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return system_from_json(j);
  } catch (const json::exception& e) {
    schema_error(path.string() + ": " + e.what());
  } catch (const Error& e) {
    // structurally valid JSON describing an invalid system is still a schema failure
    schema_error(path.string() + ": " + std::string(to_string(e.kind())) + ": " + e.what());
  }
}

}  // namespace gabor::io
