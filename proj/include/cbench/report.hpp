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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbench/manifest.hpp"
#include "cbench/metrics.hpp"
#include "cbench/predictions.hpp"

namespace cbench {

struct CorruptionScores {
  CorruptionKind kind;
  std::array<std::optional<double>, kSeverityLevels> error;
  std::optional<double> ce;           ///< all five severities present
  std::optional<double> relative_ce;  ///< also needs E_clean
  bool operator==(const CorruptionScores&) const = default;
};

struct PerturbationScores {
  PerturbationKind kind;
  std::size_t pairs = 0;
  double fp = 0.0;
  double ut5d = 0.0;
  double fr = 0.0;
  double t5d = 0.0;
  bool operator==(const PerturbationScores&) const = default;
};

/// Mistakes per true class over the corrupted items.
struct ClassTally {
  std::size_t wrong = 0;
  std::size_t total = 0;
  bool operator==(const ClassTally&) const = default;
};

/// Scores of one model on one dataset. All rates are fractions (1.0 = 100%).
///
/// Aggregates cover the benchmark (mCE) or common (mFR, mT5D) kinds present;
/// `complete` is false when any of them is missing, in which case the
/// aggregates are partial. Validation kinds are scored but never averaged.
struct RobustnessReport {
  DatasetType dataset = DatasetType::corruption;
  std::string model;
  std::string manifest_hash;
  std::string baseline;
  std::string baseline_hash;
  Difficulty difficulty = Difficulty::normal;
  int stride = 1;
  bool complete = true;

  std::optional<double> clean_error;
  std::vector<CorruptionScores> corruptions;
  std::optional<double> mce;
  std::optional<double> relative_mce;

  std::vector<PerturbationScores> perturbations;
  std::optional<double> mfr;
  std::optional<double> mt5d;

  std::map<ClassId, ClassTally> classes;

  bool operator==(const RobustnessReport&) const = default;
};

struct EvalOptions {
  int stride = 1;  ///< 1, or 2 for temporal sequences (hard difficulty)
  /// Fail unless relative CE can be computed (needs clean predictions).
  bool require_relative = false;
};

/// Scores a prediction log against its manifest.
///
/// Throws ValidationError when validate_predictions reports errors, when a
/// corruption item has no label, or (require_relative) when clean
/// predictions are absent; UndefinedMeasureError for non-positive baseline
/// denominators; ParameterError for a stride the dataset cannot use.
RobustnessReport evaluate(const DatasetManifest& manifest, const std::vector<PredictionRecord>& log,
                          const Labels& labels, const BaselineProfile& baseline, const EvalOptions& options = {});

enum class ReportFormat { text, csv, json, plots };
ReportFormat parse_report_format(std::string_view s);

/// Result-table layout: clean error and mCE followed by per-kind CEs
/// grouped Noise/Blur/Weather/Digital (percent, one decimal); perturbation
/// reports give mFR and mT5D tables. `names` labels the per-class summary.
std::string render_text(const RobustnessReport& report, const ClassNames* names = nullptr);
/// Long form `field,kind,index,value`, numbers as %.17g.
std::string render_csv(const RobustnessReport& report);
std::string render_json(const RobustnessReport& report);
/// (file name, SVG text) bar charts of the per-kind scores.
std::vector<std::pair<std::string, std::string>> render_plots(const RobustnessReport& report);

/// Inverses of render_json / render_csv. Throw FormatError.
RobustnessReport parse_report_json(std::string_view text);
RobustnessReport parse_report_csv(std::string_view text);

}  // namespace cbench
