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
#include <span>
#include <variant>
#include <vector>

#include "cbench/image.hpp"
#include "cbench/kinds.hpp"
#include "cbench/random.hpp"
#include "cbench/schedule.hpp"

namespace cbench {

/// Fully determines one corrupted output together with the schedule.
struct CorruptionSpec {
  CorruptionKind kind;
  int severity;        ///< 1..5
  std::uint64_t seed;  ///< per-image seed, see derive_corruption_seed()
};

/// Per-image seed used by dataset generation: hash(seed, item id, kind,
/// severity). Distinct item ids give distinct fog/frost/snow/... fields.
std::uint64_t derive_corruption_seed(std::uint64_t root_seed, const std::string& item_id,
                                     CorruptionKind kind, int severity);

/// Dispatches to the kind-specific procedure with the schedule's parameters
/// for spec.severity. Output has the input's dimensions and lies in [0,1].
///
/// Throws ParameterError for severities outside 1..5, schedules missing the
/// kind, and images smaller than 16x16.
ImageBuffer apply_corruption(const ImageBuffer& img, const CorruptionSpec& spec,
                             const SeveritySchedule& schedule);

// ---------------------------------------------------------------------------
// Noise

struct GaussianNoise { double sigma; };
struct ShotNoise { double photons; };     ///< lambda; smaller is noisier
struct ImpulseNoise { double amount; };   ///< replacement probability p
struct SpeckleNoise { double sigma; };
using NoiseParams = std::variant<GaussianNoise, ShotNoise, ImpulseNoise, SpeckleNoise>;

/// gaussian: x + N(0, sigma)            shot: Poisson(x * lambda) / lambda
/// impulse: each sample -> 0 or 1 with probability p/2 each
/// speckle: x + x * N(0, sigma)
/// All clamped. Throws ParameterError for sigma < 0, lambda <= 0, p outside [0,1].
ImageBuffer corrupt_noise(const ImageBuffer& img, const NoiseParams& params, RandomStream& stream);

// ---------------------------------------------------------------------------
// Blur

struct DefocusBlur { double radius; };
struct GlassBlur {
  double sigma;
  int max_delta;
  int iterations;
};
struct MotionBlur { double length; };  ///< angle drawn from the stream
struct ZoomBlur { std::vector<double> factors; };
struct GaussianBlur { double sigma; };
using BlurParams = std::variant<DefocusBlur, GlassBlur, MotionBlur, ZoomBlur, GaussianBlur>;

ImageBuffer corrupt_blur(const ImageBuffer& img, const BlurParams& params, RandomStream& stream);

/// Zoom factors 1, 1 + step, 1 + 2 step, ... not exceeding max_zoom.
std::vector<double> zoom_factors(double max_zoom, double step);

/// Motion blur at an explicit angle (degrees).
ImageBuffer motion_blur(const ImageBuffer& img, double length, double angle_deg);

// ---------------------------------------------------------------------------
// Weather

struct Snow {
  double flake_mean;     ///< mean of the raw flake noise layer
  double flake_spread;   ///< its standard deviation
  double flake_zoom;     ///< layer upscaling factor (flake size)
  double threshold;      ///< layer values below are cleared
  double streak_length;  ///< motion-blur length of the layer, pixels
  double whiten;         ///< blend weight toward the whitened image
};
struct Frost {
  double image_weight;
  double frost_weight;
  /// User frost photographs; empty selects the procedural texture.
  std::span<const ImageBuffer> textures = {};
};
struct Fog {
  double weight;     ///< w in out = (1 - w) x + w * fog
  double roughness;  ///< diamond-square amplitude decay per level, (0, 1]
  double floor;      ///< fog layer = max_luma * (floor + (1 - floor) * plasma)
};
struct Brightness { double delta; };
struct Spatter {
  double threshold;  ///< z-score cut on the smoothed noise field
  double smoothing;  ///< Gaussian sigma of the field, pixels
  double opacity;
  bool mud;  ///< opaque mud blobs instead of translucent water
};
using WeatherParams = std::variant<Snow, Frost, Fog, Brightness, Spatter>;

ImageBuffer corrupt_weather(const ImageBuffer& img, const WeatherParams& params,
                            RandomStream& stream);

/// Plasma fractal on an n x n grid, n = 2^k + 1 (k >= 1). Corners are drawn
/// uniform in [0,1); each level averages (square step: 4 corners; diamond
/// step: 4 neighbours, or the 2 edge endpoints on the border) and adds
/// uniform noise in [-a, a], with a = amplitude * roughness^level. Min-max
/// normalized to [0,1] (a constant map becomes all zeros).
///
/// Throws ParameterError for invalid n or roughness outside (0, 1].
Plane diamond_square(int n, double roughness, RandomStream& stream, double amplitude = 1.0);

/// Smallest 2^k + 1 >= side.
int diamond_square_side(int side);

/// Procedural frost layer of the given size (values in [0,1]).
Plane procedural_frost(int width, int height, RandomStream& stream);

// ---------------------------------------------------------------------------
// Digital

struct Contrast { double factor; };
struct Elastic {
  double alpha;  ///< displacement scale, pixels
  double sigma;  ///< smoothing of the random field, pixels
};
struct Pixelate { double factor; };  ///< downscale factor d >= 1
struct Jpeg { int quality; };
struct Saturate {
  double scale;
  double shift;
};
using DigitalParams = std::variant<Contrast, Elastic, Pixelate, Jpeg, Saturate>;

ImageBuffer corrupt_digital(const ImageBuffer& img, const DigitalParams& params,
                            RandomStream& stream);

}  // namespace cbench
