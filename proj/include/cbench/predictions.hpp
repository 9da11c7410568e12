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

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/manifest.hpp"
#include "cbench/metrics.hpp"

namespace cbench {

/// One line of a prediction log:
///   {"id": "<manifest id>", "frame": 0, "topk": [c1, c2, ...], "model": "..."}
/// `frame` defaults to 0 and `model` is optional; other fields are ignored.
struct PredictionRecord {
  std::string id;
  int frame = 0;
  Ranking topk;
  std::string model;
  std::size_t line = 0;  ///< 1-based source line, 0 when built in memory
};

/// Throws ParseError (with the line number) for malformed lines: invalid
/// JSON, missing or mistyped fields, negative frames or class ids, empty
/// topk. Blank lines are skipped.
std::vector<PredictionRecord> parse_prediction_log(std::istream& in);
std::vector<PredictionRecord> load_prediction_log(const std::filesystem::path& path);
/// Single-line JSON without trailing newline.
std::string format_prediction(const PredictionRecord& record);
void save_prediction_log(const std::filesystem::path& path, const std::vector<PredictionRecord>& records);

/// Source id -> class id, from `id<TAB>class` lines.
using Labels = std::map<std::string, ClassId, std::less<>>;
/// Class id -> display name, from `class<TAB>name` lines.
using ClassNames = std::map<ClassId, std::string>;

/// Blank lines and lines starting with '#' are skipped. Throws ParseError on
/// malformed or duplicate entries.
Labels parse_labels(std::istream& in);
Labels load_labels(const std::filesystem::path& path);
ClassNames parse_class_names(std::istream& in);
ClassNames load_class_names(const std::filesystem::path& path);

/// Checks a log against a manifest. Errors: `missing` (a record/frame
/// without prediction), `extra` (id not in the manifest), `frame_range`,
/// `duplicate`, `duplicate_class`. Warnings: `missing_clean` (no prediction
/// for a clean record), `short_topk` for rankings with fewer than 6 classes
/// when the manifest is a perturbation set.
std::vector<Diagnostic> validate_predictions(const std::vector<PredictionRecord>& log,
                                             const DatasetManifest& manifest);

/// True when any diagnostic is an error.
bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace cbench
