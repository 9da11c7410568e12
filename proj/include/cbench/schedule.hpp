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
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/kinds.hpp"

namespace cbench {

/// Direction in which a parameter must move as severity increases.
enum class Trend { increasing, decreasing, fixed };

struct ParamDescriptor {
  std::string_view name;
  Trend trend;
  double lo;  ///< inclusive bounds on every value
  double hi;
  std::string_view meaning;
};

/// Parameters every schedule must provide for a corruption kind, in file
/// order. Each holds one value per severity.
std::span<const ParamDescriptor> corruption_params(CorruptionKind kind);
/// Per-step parameters for a perturbation kind (a single value each; the
/// trend field is unused).
std::span<const ParamDescriptor> perturbation_params(PerturbationKind kind);

/// Severity parameterization for all corruption kinds plus per-step
/// perturbation magnitudes.
///
/// On disk this is an INI file: one `[<corruption kind>]` section with five
/// whitespace-separated values per parameter, and one
/// `[perturbation.<kind>]` section with a single value per parameter. An
/// optional `textures` key in `[frost]` lists user frost images separated by
/// ';'.
class SeveritySchedule {
 public:
  using Series = std::array<double, kSeverityLevels>;

  /// The shipped calibrated defaults (identical to data/default_schedule.ini).
  static SeveritySchedule defaults();
  /// Parses and validates. Throws ParameterError naming the offending
  /// section/key. Kinds absent from the text fall back to the defaults.
  static SeveritySchedule parse(std::string_view text);
  static SeveritySchedule load(const std::filesystem::path& path);

  /// Canonical text form; parse(serialize()) reproduces the schedule.
  std::string serialize() const;
  /// SHA-256 of serialize(); recorded in manifests.
  std::string hash() const;

  bool covers(CorruptionKind kind) const { return corruption_.contains(kind); }
  const Series& series(CorruptionKind kind, std::string_view param) const;
  /// severity is 1-based.
  double param(CorruptionKind kind, std::string_view param, int severity) const;
  void set(CorruptionKind kind, std::string_view param, const Series& values);

  double perturbation_param(PerturbationKind kind, std::string_view param) const;
  void set_perturbation_param(PerturbationKind kind, std::string_view param, double value);

  const std::vector<std::string>& frost_textures() const { return frost_textures_; }
  void set_frost_textures(std::vector<std::string> paths) { frost_textures_ = std::move(paths); }

  /// Checks completeness and monotonicity: every parameter follows its trend
  /// (non-strictly), and at least one parameter of each kind changes strictly
  /// at every severity step.
  void validate() const;

 private:
  std::map<CorruptionKind, std::map<std::string, Series, std::less<>>> corruption_;
  std::map<PerturbationKind, std::map<std::string, double, std::less<>>> perturbation_;
  std::vector<std::string> frost_textures_;
};

/// Path of the schedule to use when none is given explicitly: the
/// CORRUPTION_BENCH_SCHEDULE environment variable if set, otherwise empty
/// (meaning the built-in defaults).
std::filesystem::path default_schedule_path();

/// Loads `explicit_path` if non-empty, else default_schedule_path() if set,
/// else returns the built-in defaults.
SeveritySchedule resolve_schedule(const std::filesystem::path& explicit_path);

}  // namespace cbench
