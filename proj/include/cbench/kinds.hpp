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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cbench {

/// Corruption types. The first 15 form the benchmark set; the last four are
/// held out for validation.
enum class CorruptionKind {
  gaussian_noise,
  shot_noise,
  impulse_noise,
  defocus_blur,
  glass_blur,
  motion_blur,
  zoom_blur,
  snow,
  frost,
  fog,
  brightness,
  contrast,
  elastic,
  pixelate,
  jpeg,
  speckle_noise,
  gaussian_blur,
  spatter,
  saturate,
};

inline constexpr std::size_t kCorruptionKindCount = 19;
inline constexpr std::size_t kBenchmarkCorruptionCount = 15;
inline constexpr int kSeverityLevels = 5;

enum class Category { noise, blur, weather, digital };

/// Perturbation sequence types. The first 10 are the common set; the last four
/// are validation perturbations.
enum class PerturbationKind {
  gaussian_noise,
  shot_noise,
  motion_blur,
  zoom_blur,
  snow,
  brightness,
  translate,
  rotate,
  tilt,
  scale,
  speckle_noise,
  gaussian_blur,
  spatter,
  shear,
};

inline constexpr std::size_t kPerturbationKindCount = 14;
inline constexpr std::size_t kCommonPerturbationCount = 10;

/// How a sequence is built: noise-mode frames perturb frame 0 independently;
/// temporal frames perturb their predecessor.
enum class SequenceMode { noise, temporal };

/// Hard sequences double the per-step magnitude and are usually scored with
/// stride 2.
enum class Difficulty { normal, hard };

/// Indices (0-based) of two frames compared by the stability metrics.
struct FramePair {
  int a;
  int b;
  bool operator==(const FramePair&) const = default;
};

const std::array<CorruptionKind, kCorruptionKindCount>& all_corruption_kinds();
const std::array<PerturbationKind, kPerturbationKindCount>& all_perturbation_kinds();

std::string_view name(CorruptionKind kind);
std::string_view name(PerturbationKind kind);
/// Short column label as used in result tables ("Gauss.", "Shot", ...).
std::string_view short_label(CorruptionKind kind);
std::string_view short_label(PerturbationKind kind);
Category category(CorruptionKind kind);
Category category(PerturbationKind kind);
std::string_view name(Category c);
std::string_view name(SequenceMode m);
std::string_view name(Difficulty d);

bool is_benchmark(CorruptionKind kind);
bool is_common(PerturbationKind kind);
SequenceMode sequence_mode(PerturbationKind kind);

std::optional<CorruptionKind> find_corruption_kind(std::string_view name);
std::optional<PerturbationKind> find_perturbation_kind(std::string_view name);
/// Throw ParameterError on unknown names.
CorruptionKind parse_corruption_kind(std::string_view name);
PerturbationKind parse_perturbation_kind(std::string_view name);
SequenceMode parse_sequence_mode(std::string_view name);
Difficulty parse_difficulty(std::string_view name);

/// Frame pairs scored for a sequence of n_frames.
///   temporal, stride 1: (j-1, j) for j = 1..n-1
///   temporal, stride 2: (j-2, j) for j = 2..n-1
///   noise:              (0, j)   for j = 1..n-1
/// Throws ParameterError for n_frames < 2, strides other than 1 and 2, and
/// stride 2 on a noise sequence.
std::vector<FramePair> frame_pairs(SequenceMode mode, int n_frames, int stride = 1);

/// Expands a comma-separated filter. Accepts kind names plus the group names
/// "benchmark"/"common", "validation" and "all". Result keeps canonical order
/// and has no duplicates.
std::vector<CorruptionKind> parse_corruption_filter(std::string_view list);
std::vector<PerturbationKind> parse_perturbation_filter(std::string_view list);

}  // namespace cbench
