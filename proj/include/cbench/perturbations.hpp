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
#include <string>
#include <vector>

#include "cbench/filter.hpp"
#include "cbench/image.hpp"
#include "cbench/kinds.hpp"
#include "cbench/schedule.hpp"

namespace cbench {

/// Smallest accepted sequence length.
inline constexpr int kMinSequenceFrames = 31;

struct PerturbationSpec {
  PerturbationKind kind;
  int n_frames = kMinSequenceFrames;
  Difficulty difficulty = Difficulty::normal;
  std::uint64_t seed = 0;
  /// Fill rule for geometric kinds (clamp or black).
  Boundary fill = Boundary::clamp;
};

/// Per-sequence seed: hash(seed, item id, kind, difficulty).
std::uint64_t derive_perturbation_seed(std::uint64_t root_seed, const std::string& item_id,
                                       PerturbationKind kind, Difficulty difficulty);

struct PerturbationSequence {
  PerturbationSpec spec;
  SequenceMode mode;
  std::vector<ImageBuffer> frames;
};

/// Frame 0 is `img`; frame j >= 1 is an independent noise draw applied to
/// `img` itself. Hard difficulty doubles the noise standard deviation (a
/// quarter of the photon count for shot noise).
///
/// Throws ParameterError for temporal kinds, n_frames < 31 and images smaller
/// than 16x16.
PerturbationSequence gen_noise_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                        const SeveritySchedule& schedule);

/// Frame 0 is `img`; frame j is frame j-1 moved one step further.
///
/// Geometric kinds (translate, rotate, scale, shear, tilt) and brightness
/// render frame j from `img` with the j-fold composed step, which equals
/// stepping frame j-1 but avoids resampling the same pixels 30 times. Blur,
/// snow and spatter steps are applied to frame j-1, so their effect
/// accumulates. Hard difficulty doubles the per-step magnitude.
///
/// Throws ParameterError for noise kinds, n_frames < 31 and images smaller
/// than 16x16.
PerturbationSequence gen_temporal_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                           const SeveritySchedule& schedule);

/// Dispatches on sequence_mode(spec.kind).
PerturbationSequence generate_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                       const SeveritySchedule& schedule);

/// Rotation of the image plane by ax degrees about the horizontal axis and ay
/// degrees about the vertical axis through the image centre, seen by a
/// pinhole camera with focal length equal to the image width.
ImageBuffer tilt(const ImageBuffer& img, double ax_deg, double ay_deg,
                 Boundary fill = Boundary::clamp);

/// Horizontal shear about the centre row: source x = x + k (y - cy).
ImageBuffer shear(const ImageBuffer& img, double k, Boundary fill = Boundary::clamp);

/// Rotation about the centre by `deg` degrees, counter-clockwise as displayed
/// (y down).
ImageBuffer rotate(const ImageBuffer& img, double deg, Boundary fill = Boundary::clamp);

/// Content moves left by `dx` pixels: out(x, y) = in(x + dx, y).
ImageBuffer translate(const ImageBuffer& img, double dx, Boundary fill = Boundary::clamp);

}  // namespace cbench
