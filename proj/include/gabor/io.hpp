#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gabor/finite_model.hpp"
#include "gabor/frame_analysis.hpp"
#include "gabor/zak.hpp"

namespace gabor::io {

using json = nlohmann::json;

// Schemas (all failures raise Error with ErrorKind::Schema):
//   set:     {"period": N, "residues": [r0, r1, ...]}
//   window:  {"offset": j0, "values": [[re, im], ...]}
//   system:  {"L": .., "M": .., "N": .., "set": {...}, "windows": [...]}   ("set" optional, default Z)
//   K:       {"size": P, "entries": [[re, im], ...]}                       (row-major, P² entries)

json to_json(const PeriodicSet& s);
json to_json(const Window& w);
json to_json(const GaborSystem& sys);
json to_json(const FrameReport& r);
json to_json(const ZakFrameEstimate& z);
json to_json(const KFrameVerdict& v);
json to_json(const Matrix& K);

PeriodicSet set_from_json(const json& j);
Window window_from_json(const json& j);
GaborSystem system_from_json(const json& j);
KOperator operator_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
GaborSystem load_system(const std::filesystem::path& path);

}  // namespace gabor::io
