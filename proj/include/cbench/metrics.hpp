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
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/kinds.hpp"

namespace cbench {

/// Opaque non-negative class id.
using ClassId = std::int64_t;

/// Ranked class ids, best first. Classes absent from the list rank below
/// every listed class.
using Ranking = std::vector<ClassId>;

/// Entries past this rank never change top5_distance.
inline constexpr int kRankCap = 6;

// ---------------------------------------------------------------------------
// Top-5 distance

/// d(tau_a, tau_b) with sigma = tau_a^-1 tau_b: for the classes at ranks
/// i = 1..5 of `a`, sigma(i) is their rank in `b` (absent classes rank 6),
/// and each contributes the number of j in (min(i, sigma(i)), max(i, sigma(i))]
/// with 1 <= j - 1 <= 5. Result lies in 0..18; disjoint top-5 lists
/// give 15.
///
/// Lists shorter than 5 are treated as if padded with classes unknown to the
/// other list. Throws ValidationError on duplicate ids.
int top5_distance(const Ranking& a, const Ranking& b);

/// Zipfian displacement sum_i w_i |w_i - w_sigma(i)|, w_i = 1/i, over full
/// rankings of a shared class universe of size N = a.size().
///
/// Throws ValidationError when the lists rank different class sets or
/// contain duplicates.
double zipfian_distance(const Ranking& a, const Ranking& b);

// ---------------------------------------------------------------------------
// Sequence stability

/// Fraction of frame pairs (see frame_pairs) whose rank-1 classes differ.
/// Throws ParameterError for sequences shorter than 2.
double flip_probability(std::span<const ClassId> top1, SequenceMode mode, int stride = 1);

/// Mean of top5_distance(later frame, earlier frame) over the frame pairs.
double ut5d(std::span<const Ranking> frames, SequenceMode mode, int stride = 1);

/// Flip count and distance total of one sequence, for pooling over many
/// sequences (FP = flips / pairs, uT5D = distance / pairs).
struct StabilityTally {
  std::size_t pairs = 0;
  std::size_t flips = 0;
  double distance = 0.0;

  void add(std::span<const Ranking> frames, SequenceMode mode, int stride = 1);
  double fp() const;
  double ut5d() const;
};

// ---------------------------------------------------------------------------
// Baseline

/// Denominators used to standardize every score. Corruption denominators are
/// the baseline's mean top-1 error over the five severities; all values are
/// fractions, not percentages.
struct BaselineProfile {
  std::string name;
  double clean_error = 0.0;
  std::map<CorruptionKind, double> corruption_denoms;
  std::map<PerturbationKind, double> fp_denoms;
  std::map<PerturbationKind, double> ut5d_denoms;

  /// INI text: [profile] name, clean_error; then [corruption_denoms],
  /// [fp_denoms], [ut5d_denoms] keyed by kind name.
  static BaselineProfile parse(std::string_view text);
  static BaselineProfile load(const std::filesystem::path& path);
  std::string serialize() const;
  /// SHA-256 of serialize().
  std::string hash() const;
  /// Throws ParameterError unless every denominator is strictly positive
  /// and clean_error lies in [0, 1].
  void validate() const;

  double corruption_denom(CorruptionKind kind) const;
  double fp_denom(PerturbationKind kind) const;
  double ut5d_denom(PerturbationKind kind) const;
};

/// Names of the shipped profiles ("alexnet-paper", "unit").
std::vector<std::string> builtin_profile_names();
/// Throws ParameterError for unknown names.
BaselineProfile builtin_profile(std::string_view name);
/// A built-in name, or else a path to a profile file.
BaselineProfile resolve_profile(const std::string& name_or_path);

// ---------------------------------------------------------------------------
// Corruption errors

/// Top-1 error per (kind, severity) plus the clean error.
struct ErrorTable {
  std::map<CorruptionKind, std::array<std::optional<double>, kSeverityLevels>> entries;
  std::optional<double> clean_error;

  bool complete(CorruptionKind kind) const;
  /// severity is 1-based. Throws ValidationError when absent.
  double error(CorruptionKind kind, int severity) const;
  void set(CorruptionKind kind, int severity, double error);
};

/// One scored image: its group (kind and severity, or clean) and the
/// classifier's rank-1 class next to the label.
struct Outcome {
  std::optional<CorruptionKind> kind;  ///< empty for the clean set
  int severity = 0;
  ClassId predicted = 0;
  ClassId label = 0;
};

/// Error rate per group; order of `outcomes` is irrelevant.
ErrorTable error_table(std::span<const Outcome> outcomes);

/// sum_s E_s / sum_s E^base_s, with the baseline sum taken as 5 x its mean.
/// relative: sum_s (E_s - E_clean) / sum_s (E^base_s - E^base_clean).
///
/// Throws ValidationError when the table lacks the kind or (relative) the
/// clean error, UndefinedMeasureError when a denominator is <= 0.
double corruption_error(const ErrorTable& table, const BaselineProfile& baseline, CorruptionKind kind,
                        bool relative = false);

/// Mean over the 15 benchmark kinds; validation kinds in `ce` are ignored.
/// Throws ValidationError when a benchmark kind is missing.
double mce(const std::map<CorruptionKind, double>& ce);

// ---------------------------------------------------------------------------
// Perturbation rates

/// FP / FP^base. Throws UndefinedMeasureError for a denominator <= 0.
double flip_rate(double fp, const BaselineProfile& baseline, PerturbationKind kind);
/// uT5D / uT5D^base.
double t5d(double ut5d, const BaselineProfile& baseline, PerturbationKind kind);

struct FlipRates {
  std::map<PerturbationKind, double> fr;
  double mfr;
};

/// Per-kind FR and their mean over the 10 common perturbations. Throws
/// ValidationError when a common kind is missing.
FlipRates flip_rate(const std::map<PerturbationKind, double>& fp, const BaselineProfile& baseline);

/// Mean over the 10 common perturbations (used for mFR and mT5D).
/// Validation kinds are ignored. Throws ValidationError when one is missing.
double mean_over_common(const std::map<PerturbationKind, double>& values);
inline double mt5d(const std::map<PerturbationKind, double>& t5d_values) {
  return mean_over_common(t5d_values);
}

}  // namespace cbench
