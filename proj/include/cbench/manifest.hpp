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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/filter.hpp"
#include "cbench/image_io.hpp"
#include "cbench/kinds.hpp"

namespace cbench {

inline constexpr std::string_view kToolkitVersion = "1.0.0";
inline constexpr std::string_view kManifestFormat = "cbench-manifest/1";
inline constexpr std::string_view kManifestFileName = "manifest.json";

enum class DatasetType { corruption, perturbation };
/// Perturbation frames as one file per frame, or one PNG holding all frames
/// stacked top to bottom.
enum class FrameStorage { frames, stack };

std::string_view name(DatasetType t);
std::string_view name(FrameStorage s);
DatasetType parse_dataset_type(std::string_view s);
FrameStorage parse_frame_storage(std::string_view s);
std::string_view name(Boundary b);
Boundary parse_fill(std::string_view s);

/// One generated item.
///
/// Ids:
///   corruption     <kind>/<severity>/<source id>
///   perturbation   <kind>/<source id>     (frames 0..n_frames-1)
///   clean          clean/<source id>      (no output; hashes the source)
/// The source id is the path below the source root without its extension.
struct ManifestRecord {
  std::string id;
  std::string item;
  std::string source;  ///< relative to the source root
  std::string kind;    ///< kind name or "clean"
  int severity = 0;
  std::uint64_t seed = 0;
  int n_frames = 1;
  std::vector<std::string> outputs;  ///< relative to the manifest directory
  std::vector<std::string> sha256;   ///< one per output; the source hash for clean records

  bool is_clean() const { return kind == "clean"; }
};

struct ItemError {
  std::string item;
  std::string message;
  bool operator==(const ItemError&) const = default;
};

struct DatasetManifest {
  std::string toolkit_version{kToolkitVersion};
  /// Benchmark data: for evaluation only, never for training.
  bool benchmark_only = true;
  DatasetType type = DatasetType::corruption;
  std::uint64_t seed = 0;
  std::string schedule_hash;
  std::string schedule;  ///< full schedule text
  std::string baseline_profile = "alexnet-paper";
  std::string codec;
  std::string source_root;
  std::string resolution = "native";
  ImageFormat format = ImageFormat::jpeg;
  int quality = 85;
  // perturbation datasets
  Difficulty difficulty = Difficulty::normal;
  int n_frames = 0;
  FrameStorage storage = FrameStorage::frames;
  Boundary fill = Boundary::clamp;

  bool complete = true;
  std::vector<ItemError> errors;
  std::vector<ManifestRecord> records;

  /// Canonical JSON, records in stored order.
  std::string serialize() const;
  /// Throws ParseError / FormatError on malformed text.
  static DatasetManifest parse(std::string_view text);
  static DatasetManifest load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// SHA-256 of serialize() with source_root blanked, so identical data
  /// generated from different checkouts hashes the same.
  std::string content_hash() const;

  /// nullptr when absent.
  const ManifestRecord* find(std::string_view id) const;
};

/// Source id: relative path with '/' separators and no extension.
std::string source_item_id(const std::filesystem::path& relative);

/// Image files (.png, .jpg, .jpeg, any case) below `root`, sorted by
/// relative path. Throws IoError when root is not a directory.
std::vector<std::filesystem::path> list_source_images(const std::filesystem::path& root);

/// One manifest defect found on disk or in a prediction log.
struct Diagnostic {
  enum class Level { error, warning };
  Level level = Level::error;
  std::string code;  ///< missing_file, hash_mismatch, unlisted_file, missing, extra, ...
  std::string id;
  int frame = -1;
  std::string message;

  std::string to_string() const;
};

/// Checks that every output exists and matches its hash, that clean sources
/// are unchanged, and that no unlisted image sits under the dataset root.
std::vector<Diagnostic> verify_outputs(const DatasetManifest& manifest, const std::filesystem::path& dataset_dir);

}  // namespace cbench
