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

#include "cbench/perturbations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cbench/color.hpp"
#include "cbench/corruptions.hpp"
#include "cbench/error.hpp"
#include "cbench/random.hpp"

namespace cbench {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_spec(const ImageBuffer& img, const PerturbationSpec& spec, SequenceMode want) {
  require_benchmark_size(img);
  if (spec.n_frames < kMinSequenceFrames) {
    throw ParameterError("perturbation sequences need at least " + std::to_string(kMinSequenceFrames) +
                         " frames, got " + std::to_string(spec.n_frames));
  }
  if (sequence_mode(spec.kind) != want) {
    throw ParameterError("perturbation '" + std::string(name(spec.kind)) + "' is not a " +
                         std::string(name(want)) + " kind");
  }
  if (spec.fill != Boundary::clamp && spec.fill != Boundary::black) {
    throw ParameterError("perturbation fill must be clamp or black");
  }
}

RandomStream sequence_stream(const PerturbationSpec& spec) {
  return RandomStream(spec.seed, {std::string(name(spec.kind))});
}

ImageBuffer shift_value(const ImageBuffer& hsv, double delta) {
  ImageBuffer out = hsv;
  auto d = out.data();
  for (std::size_t i = 2; i < d.size(); i += 3) d[i] = std::clamp(d[i] + static_cast<float>(delta), 0.0f, 1.0f);
  return hsv_to_rgb(out);
}

}  // namespace

std::uint64_t derive_perturbation_seed(std::uint64_t root_seed, const std::string& item_id,
                                       PerturbationKind kind, Difficulty difficulty) {
  return RandomStream::derive(root_seed, {item_id, std::string(name(kind)), std::string(name(difficulty))});
}

ImageBuffer translate(const ImageBuffer& img, double dx, Boundary fill) {
  return warp(
      img,
      [=](double x, double y, double& sx, double& sy) {
        sx = x + dx;
        sy = y;
      },
      fill);
}

ImageBuffer rotate(const ImageBuffer& img, double deg, Boundary fill) {
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  const double c = std::cos(deg * kDegToRad);
  const double s = std::sin(deg * kDegToRad);
  return warp(
      img,
      [=](double x, double y, double& sx, double& sy) {
        const double u = x - cx;
        const double v = y - cy;
        sx = cx + c * u - s * v;
        sy = cy + s * u + c * v;
      },
      fill);
}

ImageBuffer shear(const ImageBuffer& img, double k, Boundary fill) {
  const double cy = (img.height() - 1) / 2.0;
  return warp(
      img,
      [=](double x, double y, double& sx, double& sy) {
        sx = x + k * (y - cy);
        sy = y;
      },
      fill);
}

ImageBuffer tilt(const ImageBuffer& img, double ax_deg, double ay_deg, Boundary fill) {
  const double f = img.width();
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  const double a = ax_deg * kDegToRad;
  const double b = ay_deg * kDegToRad;
  // R = Rx(a) Ry(b); columns are the rotated plane axes
  const std::array<std::array<double, 3>, 3> r{{
      {std::cos(b), 0.0, std::sin(b)},
      {std::sin(a) * std::sin(b), std::cos(a), -std::sin(a) * std::cos(b)},
      {-std::cos(a) * std::sin(b), std::sin(a), std::cos(a) * std::cos(b)},
  }};
  const double nx = r[0][2];
  const double ny = r[1][2];
  const double nz = r[2][2];
  return warp(
      img,
      [=](double x, double y, double& sx, double& sy) {
        // ray through the destination pixel meets the rotated plane
        const double dx = x - cx;
        const double dy = y - cy;
        const double t = f * nz / (dx * nx + dy * ny + f * nz);
        const double px = t * dx;
        const double py = t * dy;
        const double pz = t * f - f;
        sx = cx + r[0][0] * px + r[1][0] * py + r[2][0] * pz;
        sy = cy + r[0][1] * px + r[1][1] * py + r[2][1] * pz;
      },
      fill);
}

PerturbationSequence gen_noise_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                        const SeveritySchedule& schedule) {
  check_spec(img, spec, SequenceMode::noise);
  const bool hard = spec.difficulty == Difficulty::hard;
  const double gain = hard ? 2.0 : 1.0;
  NoiseParams params;
  switch (spec.kind) {
    case PerturbationKind::gaussian_noise:
      params = GaussianNoise{gain * schedule.perturbation_param(spec.kind, "sigma")};
      break;
    case PerturbationKind::shot_noise:
      params = ShotNoise{schedule.perturbation_param(spec.kind, "photons") / (gain * gain)};
      break;
    case PerturbationKind::speckle_noise:
      params = SpeckleNoise{gain * schedule.perturbation_param(spec.kind, "sigma")};
      break;
    default:
      throw ParameterError("not a noise perturbation");
  }
  PerturbationSequence seq{spec, SequenceMode::noise, {}};
  seq.frames.reserve(static_cast<std::size_t>(spec.n_frames));
  seq.frames.push_back(img);
  const RandomStream base = sequence_stream(spec);
  for (int j = 1; j < spec.n_frames; ++j) {
    RandomStream rs = base.child(std::int64_t{j});
    seq.frames.push_back(corrupt_noise(img, params, rs));
  }
  return seq;
}

PerturbationSequence gen_temporal_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                           const SeveritySchedule& schedule) {
  check_spec(img, spec, SequenceMode::temporal);
  const bool hard = spec.difficulty == Difficulty::hard;
  const double gain = hard ? 2.0 : 1.0;
  auto p = [&](std::string_view param) { return schedule.perturbation_param(spec.kind, param); };
  const int n = spec.n_frames;
  PerturbationSequence seq{spec, SequenceMode::temporal, {}};
  auto& frames = seq.frames;
  frames.reserve(static_cast<std::size_t>(n));
  frames.push_back(img);
  RandomStream rs = sequence_stream(spec);

  switch (spec.kind) {
    case PerturbationKind::translate: {
      const double step = gain * p("step_pixels");
      for (int j = 1; j < n; ++j) frames.push_back(translate(img, j * step, spec.fill));
      break;
    }
    case PerturbationKind::rotate: {
      const double step = gain * p("step_degrees");
      for (int j = 1; j < n; ++j) frames.push_back(rotate(img, j * step, spec.fill));
      break;
    }
    case PerturbationKind::shear: {
      const double step = gain * p("step");
      for (int j = 1; j < n; ++j) frames.push_back(shear(img, j * step, spec.fill));
      break;
    }
    case PerturbationKind::scale: {
      const double step = 1.0 + gain * (p("step_factor") - 1.0);
      for (int j = 1; j < n; ++j) frames.push_back(zoom_about_center(img, std::pow(step, j), spec.fill));
      break;
    }
    case PerturbationKind::tilt: {
      const double m = gain * p("max_step_degrees");
      const double ax = rs.uniform(-m, m);
      const double ay = rs.uniform(-m, m);
      for (int j = 1; j < n; ++j) frames.push_back(tilt(img, j * ax, j * ay, spec.fill));
      break;
    }
    case PerturbationKind::brightness: {
      const double step = gain * p("step");
      const ImageBuffer hsv = rgb_to_hsv(img);
      for (int j = 1; j < n; ++j) frames.push_back(shift_value(hsv, j * step));
      break;
    }
    case PerturbationKind::motion_blur: {
      const double start = gain * p("length_start");
      const double growth = gain * p("length_growth");
      const double angle = rs.uniform(-45.0, 45.0);
      for (int j = 1; j < n; ++j) frames.push_back(motion_blur(frames.back(), start + (j - 1) * growth, angle));
      break;
    }
    case PerturbationKind::zoom_blur: {
      const double start = gain * p("zoom_start");
      const double growth = gain * p("zoom_growth");
      for (int j = 1; j < n; ++j) {
        const double z = start + (j - 1) * growth;
        const BlurParams params = ZoomBlur{{1.0, 1.0 + z / 3.0, 1.0 + 2.0 * z / 3.0, 1.0 + z}};
        frames.push_back(corrupt_blur(frames.back(), params, rs));
      }
      break;
    }
    case PerturbationKind::gaussian_blur: {
      const double start = gain * p("sigma_start");
      const double growth = gain * p("sigma_growth");
      for (int j = 1; j < n; ++j) frames.push_back(gaussian_blur(frames.back(), start + (j - 1) * growth));
      break;
    }
    case PerturbationKind::snow: {
      const WeatherParams params = Snow{p("flake_mean"), p("flake_spread"), p("flake_zoom"),
                                        p("threshold"), p("streak_length"), 0.0};
      for (int j = 1; j < n; ++j) {
        ImageBuffer next = frames.back();
        for (int k = 0; k < (hard ? 2 : 1); ++k) {
          RandomStream layer = rs.child(std::int64_t{j}).child(std::int64_t{k});
          next = corrupt_weather(next, params, layer);
        }
        frames.push_back(std::move(next));
      }
      break;
    }
    case PerturbationKind::spatter: {
      const WeatherParams params = Spatter{p("threshold"), p("smoothing"), p("opacity"), false};
      for (int j = 1; j < n; ++j) {
        ImageBuffer next = frames.back();
        for (int k = 0; k < (hard ? 2 : 1); ++k) {
          RandomStream layer = rs.child(std::int64_t{j}).child(std::int64_t{k});
          next = corrupt_weather(next, params, layer);
        }
        frames.push_back(std::move(next));
      }
      break;
    }
    default:
      throw ParameterError("not a temporal perturbation");
  }
  return seq;
}

PerturbationSequence generate_sequence(const ImageBuffer& img, const PerturbationSpec& spec,
                                       const SeveritySchedule& schedule) {
  return sequence_mode(spec.kind) == SequenceMode::noise ? gen_noise_sequence(img, spec, schedule)
                                                         : gen_temporal_sequence(img, spec, schedule);
}

}  // namespace cbench
