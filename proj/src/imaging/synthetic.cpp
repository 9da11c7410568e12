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

#include "cbench/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cbench/color.hpp"
#include "cbench/error.hpp"
#include "cbench/filter.hpp"
#include "cbench/image_io.hpp"
#include "cbench/random.hpp"

namespace cbench {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Sum of bilinearly upsampled random grids, amplitude halving per octave.
Plane value_noise(int w, int h, RandomStream& rs, int octaves) {
  Plane acc(w, h, 0.0f);
  double amp = 1.0;
  for (int o = 0; o < octaves; ++o) {
    const int cells = 4 << o;
    Plane grid(cells + 1, cells + 1);
    for (float& v : grid.data()) v = static_cast<float>(rs.uniform(-1.0, 1.0));
    const Plane up = resample_bilinear(grid, w, h);
    auto a = acc.data();
    const auto u = up.data();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += static_cast<float>(amp * u[i]);
    amp *= 0.5;
  }
  return acc;
}

}  // namespace

ImageBuffer synthetic_image(int width, int height, std::uint64_t seed, int index) {
  if (width < 1 || height < 1) throw ParameterError("synthetic_image: empty size");
  RandomStream rs(seed, {"synthetic", std::int64_t{index}});
  ImageBuffer img(width, height);

  float bg[3];
  hsv_to_rgb({static_cast<float>(rs.uniform()), static_cast<float>(rs.uniform(0.1, 0.5)),
              static_cast<float>(rs.uniform(0.3, 0.8))}, bg[0], bg[1], bg[2]);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = bg[c];
    }
  }

  // dead leaves: radii with density ~ r^-3 between rmin and rmax
  const double scale = std::min(width, height) / 224.0;
  const double rmin = 5.0 * scale;
  const double rmax = 110.0 * scale;
  const double a = std::pow(rmin, -2.0);
  const double b = std::pow(rmax, -2.0);
  const int leaves = static_cast<int>(rs.integer(1000, 2000));
  const double hue_centre = rs.uniform();
  for (int i = 0; i < leaves; ++i) {
    const double r = std::pow(a - rs.uniform() * (a - b), -0.5);
    const double cx = rs.uniform(-0.1, 1.1) * width;
    const double cy = rs.uniform(-0.1, 1.1) * height;
    const double aspect = rs.uniform(0.4, 1.0);
    const double theta = rs.uniform(0.0, kPi);
    const double hue = std::fmod(hue_centre + rs.normal(0.0, 0.15) + 1.0, 1.0);
    const double sat = rs.uniform(0.05, 0.8);
    const double val = rs.uniform(0.1, 0.95);
    const double gx = rs.normal(0.0, 0.25) / r;
    const double gy = rs.normal(0.0, 0.25) / r;
    float col[3];
    hsv_to_rgb({static_cast<float>(hue), static_cast<float>(sat), static_cast<float>(val)}, col[0], col[1], col[2]);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const int x0 = std::max(0, static_cast<int>(cx - r));
    const int x1 = std::min(width - 1, static_cast<int>(cx + r));
    const int y0 = std::max(0, static_cast<int>(cy - r));
    const int y1 = std::min(height - 1, static_cast<int>(cy + r));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double dx = x + 0.5 - cx;
        const double dy = y + 0.5 - cy;
        const double u = (dx * ct + dy * st) / r;
        const double v = (-dx * st + dy * ct) / (r * aspect);
        if (u * u + v * v > 1.0) continue;
        const double shade = 1.0 + gx * dx + gy * dy;
        for (int c = 0; c < 3; ++c) img.at(x, y, c) = static_cast<float>(col[c] * shade);
      }
    }
  }

  // fine texture and a broad illumination gradient
  const Plane tex = value_noise(width, height, rs, 5);
  const double tex_amp = rs.uniform(0.01, 0.03);
  const double lx = rs.normal(0.0, 0.15);
  const double ly = rs.normal(0.0, 0.15);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double light = 1.0 + lx * (static_cast<double>(x) / width - 0.5) + ly * (static_cast<double>(y) / height - 0.5);
      for (int c = 0; c < 3; ++c) {
        img.at(x, y, c) = static_cast<float>(img.at(x, y, c) * light + tex_amp * tex.at(x, y));
      }
    }
  }
  img.clamp();
  ImageBuffer out = gaussian_blur(img, 1.0);
  out.clamp();
  // 8-bit content, so PNG storage is lossless
  for (float& v : out.data()) v = std::round(v * 255.0f) / 255.0f;
  return out;
}

std::vector<std::filesystem::path> write_synthetic_corpus(const std::filesystem::path& dir, int count,
                                                          int width, int height, std::uint64_t seed) {
  if (count < 1) throw ParameterError("corpus size must be >= 1");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "img_%03d.png", i);
    const auto path = dir / name;
    save_image(synthetic_image(width, height, seed, i), path, ImageFormat::png, 85);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace cbench
