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
#include <functional>
#include <string>
#include <vector>

#include "cbench/image.hpp"
#include "cbench/manifest.hpp"
#include "cbench/schedule.hpp"

namespace cbench {

/// Output resolution presets:
///   native   keep the source size
///   224      shorter side to 256, centre crop 224 x 224
///   299      shorter side to 342, centre crop 299 x 299
std::vector<std::string> resolution_presets();
/// Throws ParameterError for unknown presets.
ImageBuffer apply_resolution(const ImageBuffer& img, const std::string& preset);

/// Decodes a source file and applies the preset.
ImageBuffer load_source(const std::filesystem::path& path, const std::string& preset);

struct GenerateOptions {
  std::filesystem::path source_dir;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  SeveritySchedule schedule = SeveritySchedule::defaults();
  std::string baseline_profile = "alexnet-paper";
  std::string resolution = "native";
  int jobs = 1;
};

struct CorruptionOptions : GenerateOptions {
  std::vector<CorruptionKind> kinds;  ///< empty: the 15 benchmark kinds
  std::vector<int> severities = {1, 2, 3, 4, 5};
  ImageFormat format = ImageFormat::jpeg;
  int quality = 85;
  /// Adds clean/<id> records pointing at the sources (needed for relative
  /// CE). Clean records write no files.
  bool clean_records = true;
};

struct PerturbationOptions : GenerateOptions {
  std::vector<PerturbationKind> kinds;  ///< empty: the 10 common kinds
  int n_frames = 31;
  Difficulty difficulty = Difficulty::normal;
  FrameStorage storage = FrameStorage::frames;
  Boundary fill = Boundary::clamp;
};

/// Writes <out>/<kind>/<severity>/<relative source path> (extension replaced
/// by the output format's) and <out>/manifest.json.
///
/// Items that fail to decode or corrupt are listed in the manifest's errors
/// and mark it incomplete. Throws ParameterError when the source tree holds
/// no image files, IoError when it is unreadable.
DatasetManifest generate_corruptions(const CorruptionOptions& options);

/// Writes <out>/<kind>/<source id>/frame_XX.png (or <out>/<kind>/<source
/// id>.png in stack storage) and <out>/manifest.json. Errors as above.
DatasetManifest generate_perturbations(const PerturbationOptions& options);

/// Zero-padded frame file name, at least two digits.
std::string frame_file_name(int frame, int n_frames);

/// Frames of a perturbation record, read from either storage layout.
std::vector<ImageBuffer> load_sequence(const DatasetManifest& manifest, const ManifestRecord& record,
                                       const std::filesystem::path& dataset_dir);

/// Runs fn(i) for i in [0, n) on `jobs` threads. Exceptions escape from the
/// lowest failing index after all workers finish.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace cbench
