// Copyright 2026 The corruption-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbench/predictions.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "cbench/error.hpp"

namespace cbench {
namespace {

using json = nlohmann::ordered_json;

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

ClassId parse_class(std::string_view tok, std::size_t line) {
  ClassId v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
    throw ParseError(line, "class id must be a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

bool skippable(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  return first == std::string::npos || s[first] == '#';
}

// splits "key<TAB>value", trimming a trailing CR
std::pair<std::string, std::string> split_tab(std::string s, std::size_t line) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  const auto tab = s.find('\t');
  if (tab == std::string::npos || tab == 0 || tab + 1 == s.size()) {
    throw ParseError(line, "expected '<id><TAB><value>'");
  }
  return {s.substr(0, tab), s.substr(tab + 1)};
}

}  // namespace

std::vector<PredictionRecord> parse_prediction_log(std::istream& in) {
  std::vector<PredictionRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error&) {
      throw ParseError(line, "not a JSON object");
    }
    if (!j.is_object()) throw ParseError(line, "not a JSON object");
    PredictionRecord r;
    r.line = line;
    if (!j.contains("id") || !j["id"].is_string()) throw ParseError(line, "'id' must be a string");
    r.id = j["id"].get<std::string>();
    if (j.contains("frame")) {
      if (!j["frame"].is_number_integer() || j["frame"].get<std::int64_t>() < 0 ||
          j["frame"].get<std::int64_t>() > std::numeric_limits<int>::max()) {
        throw ParseError(line, "'frame' must be a non-negative integer");
      }
      r.frame = j["frame"].get<int>();
    }
    if (!j.contains("topk") || !j["topk"].is_array() || j["topk"].empty()) {
      throw ParseError(line, "'topk' must be a non-empty array");
    }
    for (const auto& c : j["topk"]) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw ParseError(line, "class ids must be non-negative integers");
      }
      r.topk.push_back(c.get<ClassId>());
    }
    if (j.contains("model")) {
      if (!j["model"].is_string()) throw ParseError(line, "'model' must be a string");
      r.model = j["model"].get<std::string>();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PredictionRecord> load_prediction_log(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_prediction_log(in);
}

std::string format_prediction(const PredictionRecord& r) {
  json j;
  j["id"] = r.id;
  j["frame"] = r.frame;
  j["topk"] = r.topk;
  if (!r.model.empty()) j["model"] = r.model;
  return j.dump();
}

void save_prediction_log(const std::filesystem::path& path, const std::vector<PredictionRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : records) out << format_prediction(r) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

Labels parse_labels(std::istream& in) {
  Labels out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (skippable(text)) continue;
    auto [id, cls] = split_tab(text, line);
    if (!out.emplace(id, parse_class(cls, line)).second) throw ParseError(line, "duplicate label for '" + id + "'");
  }
  return out;
}

Labels load_labels(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_labels(in);
}

ClassNames parse_class_names(std::istream& in) {
  ClassNames out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (skippable(text)) continue;
    auto [cls, label] = split_tab(text, line);
    if (!out.emplace(parse_class(cls, line), label).second) throw ParseError(line, "duplicate class " + cls);
  }
  return out;
}

ClassNames load_class_names(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_class_names(in);
}

std::vector<Diagnostic> validate_predictions(const std::vector<PredictionRecord>& log,
                                             const DatasetManifest& manifest) {
  using L = Diagnostic::Level;
  std::vector<Diagnostic> out;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < manifest.records.size(); ++i) index.emplace(manifest.records[i].id, i);
  std::vector<std::vector<bool>> seen(manifest.records.size());
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    seen[i].assign(static_cast<std::size_t>(manifest.records[i].n_frames), false);
  }
  const bool t5d = manifest.type == DatasetType::perturbation;

  for (const auto& r : log) {
    const std::string where = r.line ? "line " + std::to_string(r.line) : std::string();
    const auto it = index.find(r.id);
    if (it == index.end()) {
      out.push_back({L::error, "extra", r.id, r.frame, where + (where.empty() ? "" : ": ") + "id not in manifest"});
      continue;
    }
    auto& frames = seen[it->second];
    if (r.frame >= static_cast<int>(frames.size())) {
      out.push_back({L::error, "frame_range", r.id, r.frame,
                     "record has " + std::to_string(frames.size()) + " frame(s)"});
      continue;
    }
    if (frames[static_cast<std::size_t>(r.frame)]) {
      out.push_back({L::error, "duplicate", r.id, r.frame, where});
      continue;
    }
    frames[static_cast<std::size_t>(r.frame)] = true;
    std::set<ClassId> classes(r.topk.begin(), r.topk.end());
    if (classes.size() != r.topk.size()) out.push_back({L::error, "duplicate_class", r.id, r.frame, where});
    if (t5d && r.topk.size() < static_cast<std::size_t>(kRankCap)) {
      out.push_back({L::warning, "short_topk", r.id, r.frame,
                     "K=" + std::to_string(r.topk.size()) + " < 6; top-5 distances treat missing ranks as rank 6"});
    }
  }
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    for (std::size_t f = 0; f < seen[i].size(); ++f) {
      if (seen[i][f]) continue;
      if (manifest.records[i].is_clean()) {
        out.push_back({L::warning, "missing_clean", manifest.records[i].id, 0, "relative CE needs E_clean"});
      } else {
        out.push_back({L::error, "missing", manifest.records[i].id, static_cast<int>(f), ""});
      }
    }
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.level == Diagnostic::Level::error) return true;
  }
  return false;
}

}  // namespace cbench
