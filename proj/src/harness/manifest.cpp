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

#include "cbench/manifest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cbench/error.hpp"
#include "cbench/hash.hpp"

namespace cbench {
namespace {

using json = nlohmann::ordered_json;

json record_json(const ManifestRecord& r) {
  json j;
  j["id"] = r.id;
  j["item"] = r.item;
  j["source"] = r.source;
  j["kind"] = r.kind;
  if (r.severity != 0) j["severity"] = r.severity;
  j["seed"] = r.seed;
  if (r.n_frames != 1) j["n_frames"] = r.n_frames;
  j["outputs"] = r.outputs;
  j["sha256"] = r.sha256;
  return j;
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("manifest: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("manifest: field '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

json to_json(const DatasetManifest& m, bool with_root) {
  json j;
  j["format"] = kManifestFormat;
  j["toolkit_version"] = m.toolkit_version;
  j["benchmark_only"] = m.benchmark_only;
  j["dataset"] = name(m.type);
  j["seed"] = m.seed;
  j["schedule_hash"] = m.schedule_hash;
  j["schedule"] = m.schedule;
  j["baseline_profile"] = m.baseline_profile;
  j["codec"] = m.codec;
  j["source_root"] = with_root ? m.source_root : std::string();
  j["resolution"] = m.resolution;
  j["image_format"] = to_string(m.format);
  j["quality"] = m.quality;
  if (m.type == DatasetType::perturbation) {
    j["difficulty"] = name(m.difficulty);
    j["n_frames"] = m.n_frames;
    j["storage"] = name(m.storage);
    j["fill"] = name(m.fill);
  }
  j["complete"] = m.complete;
  json errors = json::array();
  for (const auto& e : m.errors) errors.push_back({{"item", e.item}, {"message", e.message}});
  j["errors"] = errors;
  json records = json::array();
  for (const auto& r : m.records) records.push_back(record_json(r));
  j["records"] = records;
  return j;
}

bool is_image_path(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

std::string_view name(DatasetType t) { return t == DatasetType::corruption ? "corruption" : "perturbation"; }
std::string_view name(FrameStorage s) { return s == FrameStorage::frames ? "frames" : "stack"; }

DatasetType parse_dataset_type(std::string_view s) {
  if (s == "corruption") return DatasetType::corruption;
  if (s == "perturbation") return DatasetType::perturbation;
  throw ParameterError("unknown dataset type '" + std::string(s) + "'");
}

FrameStorage parse_frame_storage(std::string_view s) {
  if (s == "frames") return FrameStorage::frames;
  if (s == "stack") return FrameStorage::stack;
  throw ParameterError("unknown frame storage '" + std::string(s) + "' (frames or stack)");
}

std::string_view name(Boundary b) {
  switch (b) {
    case Boundary::reflect: return "reflect";
    case Boundary::clamp: return "clamp";
    case Boundary::black: return "black";
  }
  return "?";
}

Boundary parse_fill(std::string_view s) {
  if (s == "clamp") return Boundary::clamp;
  if (s == "black") return Boundary::black;
  throw ParameterError("unknown fill '" + std::string(s) + "' (clamp or black)");
}

std::string DatasetManifest::serialize() const { return to_json(*this, true).dump(1) + "\n"; }

DatasetManifest DatasetManifest::parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("manifest: top level must be an object");
  if (get<std::string>(j, "format") != kManifestFormat) {
    throw FormatError("manifest: unsupported format '" + get<std::string>(j, "format") + "'");
  }
  DatasetManifest m;
  m.toolkit_version = get<std::string>(j, "toolkit_version");
  m.benchmark_only = get<bool>(j, "benchmark_only");
  m.type = parse_dataset_type(get<std::string>(j, "dataset"));
  m.seed = get<std::uint64_t>(j, "seed");
  m.schedule_hash = get<std::string>(j, "schedule_hash");
  m.schedule = get<std::string>(j, "schedule");
  m.baseline_profile = get<std::string>(j, "baseline_profile");
  m.codec = get<std::string>(j, "codec");
  m.source_root = get<std::string>(j, "source_root");
  m.resolution = get<std::string>(j, "resolution");
  m.format = parse_image_format(get<std::string>(j, "image_format"));
  m.quality = get<int>(j, "quality");
  if (m.type == DatasetType::perturbation) {
    m.difficulty = parse_difficulty(get<std::string>(j, "difficulty"));
    m.n_frames = get<int>(j, "n_frames");
    m.storage = parse_frame_storage(get<std::string>(j, "storage"));
    m.fill = parse_fill(get<std::string>(j, "fill"));
  }
  m.complete = get<bool>(j, "complete");
  for (const auto& e : get<json>(j, "errors")) {
    m.errors.push_back({get<std::string>(e, "item"), get<std::string>(e, "message")});
  }
  std::set<std::string> seen;
  for (const auto& rj : get<json>(j, "records")) {
    ManifestRecord r;
    r.id = get<std::string>(rj, "id");
    r.item = get<std::string>(rj, "item");
    r.source = get<std::string>(rj, "source");
    r.kind = get<std::string>(rj, "kind");
    r.severity = get_or<int>(rj, "severity", 0);
    r.seed = get<std::uint64_t>(rj, "seed");
    r.n_frames = get_or<int>(rj, "n_frames", 1);
    r.outputs = get<std::vector<std::string>>(rj, "outputs");
    r.sha256 = get<std::vector<std::string>>(rj, "sha256");
    if (!seen.insert(r.id).second) throw FormatError("manifest: duplicate id '" + r.id + "'");
    if (r.n_frames < 1) throw FormatError("manifest: record '" + r.id + "' has no frames");
    m.records.push_back(std::move(r));
  }
  return m;
}

DatasetManifest DatasetManifest::load(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  return parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void DatasetManifest::save(const std::filesystem::path& path) const {
  const std::string text = serialize();
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string DatasetManifest::content_hash() const { return sha256_hex(to_json(*this, false).dump(1)); }

const ManifestRecord* DatasetManifest::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string source_item_id(const std::filesystem::path& relative) {
  std::filesystem::path p = relative;
  p.replace_extension();
  return p.generic_string();
}

std::vector<std::filesystem::path> list_source_images(const std::filesystem::path& root) {
  if (!std::filesystem::is_directory(root)) throw IoError("not a directory: " + root.string());
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file() && is_image_path(e.path())) out.push_back(std::filesystem::relative(e.path(), root));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.generic_string() < b.generic_string(); });
  return out;
}

std::string Diagnostic::to_string() const {
  std::ostringstream s;
  s << (level == Level::error ? "error" : "warning") << " [" << code << "]";
  if (!id.empty()) s << " " << id;
  if (frame >= 0) s << " frame " << frame;
  if (!message.empty()) s << ": " << message;
  return s.str();
}

std::vector<Diagnostic> verify_outputs(const DatasetManifest& manifest, const std::filesystem::path& dataset_dir) {
  std::vector<Diagnostic> out;
  std::set<std::string> listed;
  auto check = [&](const ManifestRecord& r, const std::filesystem::path& file, const std::string& expected) {
    if (!std::filesystem::is_regular_file(file)) {
      out.push_back({Diagnostic::Level::error, "missing_file", r.id, -1, file.string()});
      return;
    }
    if (sha256_file(file) != expected) {
      out.push_back({Diagnostic::Level::error, "hash_mismatch", r.id, -1, file.string()});
    }
  };
  for (const auto& r : manifest.records) {
    if (r.is_clean()) {
      if (r.sha256.size() != 1) {
        out.push_back({Diagnostic::Level::error, "bad_record", r.id, -1, "clean record needs one source hash"});
        continue;
      }
      check(r, std::filesystem::path(manifest.source_root) / r.source, r.sha256[0]);
      continue;
    }
    if (r.outputs.size() != r.sha256.size() || r.outputs.empty()) {
      out.push_back({Diagnostic::Level::error, "bad_record", r.id, -1, "outputs and hashes disagree"});
      continue;
    }
    for (std::size_t i = 0; i < r.outputs.size(); ++i) {
      listed.insert(r.outputs[i]);
      check(r, dataset_dir / r.outputs[i], r.sha256[i]);
    }
  }
  if (std::filesystem::is_directory(dataset_dir)) {
    for (const auto& rel : list_source_images(dataset_dir)) {
      if (!listed.contains(rel.generic_string())) {
        out.push_back({Diagnostic::Level::error, "unlisted_file", "", -1, rel.generic_string()});
      }
    }
  }
  return out;
}

}  // namespace cbench
