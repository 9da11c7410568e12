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

#include "cbench/clahe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cbench/error.hpp"

namespace cbench {
namespace {

constexpr int kBins = 256;

int luma_bin(float y) noexcept {
  return std::clamp(static_cast<int>(std::lround(y * 255.0f)), 0, kBins - 1);
}

// Per-tile lookup of (mapped value - bin value). Identity tiles are all zeros.
using DeltaLut = std::array<float, kBins>;

DeltaLut tile_lut(const std::array<double, kBins>& hist, double pixels, double clip_limit) {
  DeltaLut lut{};
  const auto occupied = std::count_if(hist.begin(), hist.end(), [](double v) { return v > 0.0; });
  if (occupied <= 1) return lut;

  std::array<double, kBins> clipped = hist;
  const double limit = std::max(1.0, clip_limit * pixels / kBins);
  double excess = 0.0;
  for (double& v : clipped) {
    if (v > limit) {
      excess += v - limit;
      v = limit;
    }
  }
  const double share = excess / kBins;
  for (double& v : clipped) v += share;

  double cdf_min = 0.0;
  for (double v : clipped) {
    if (v > 0.0) {
      cdf_min = v;
      break;
    }
  }
  const double denom = pixels - cdf_min;
  if (denom <= 0.0) return lut;
  double cdf = 0.0;
  for (int b = 0; b < kBins; ++b) {
    cdf += clipped[static_cast<std::size_t>(b)];
    const double mapped = std::clamp((cdf - cdf_min) / denom, 0.0, 1.0);
    lut[static_cast<std::size_t>(b)] = static_cast<float>(mapped - b / 255.0);
  }
  return lut;
}

}  // namespace

ImageBuffer clahe(const ImageBuffer& img, double clip_limit, int tiles_x, int tiles_y) {
  if (!(clip_limit > 0.0)) throw ParameterError("CLAHE clip limit must be positive");
  if (tiles_x < 1 || tiles_y < 1) throw ParameterError("CLAHE tile grid must be at least 1x1");
  const int w = img.width();
  const int h = img.height();
  const int tw = (w + tiles_x - 1) / tiles_x;
  const int th = (h + tiles_y - 1) / tiles_y;

  std::vector<int> bins(img.pixel_count());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bins[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] =
          luma_bin(luma(img, x, y));
    }
  }

  std::vector<DeltaLut> luts(static_cast<std::size_t>(tiles_x * tiles_y));
  for (int ty = 0; ty < tiles_y; ++ty) {
    for (int tx = 0; tx < tiles_x; ++tx) {
      std::array<double, kBins> hist{};
      for (int y = ty * th; y < (ty + 1) * th; ++y) {
        const int sy = std::min(y, h - 1);
        for (int x = tx * tw; x < (tx + 1) * tw; ++x) {
          const int sx = std::min(x, w - 1);
          hist[static_cast<std::size_t>(
              bins[static_cast<std::size_t>(sy) * static_cast<std::size_t>(w) +
                   static_cast<std::size_t>(sx)])] += 1.0;
        }
      }
      luts[static_cast<std::size_t>(ty * tiles_x + tx)] =
          tile_lut(hist, static_cast<double>(tw) * th, clip_limit);
    }
  }

  auto neighbours = [](int p, int tile, int count, int& i0, int& i1, float& a) {
    const double f = (p + 0.5) / tile - 0.5;
    if (f <= 0.0) {
      i0 = i1 = 0;
      a = 0.0f;
    } else if (f >= count - 1) {
      i0 = i1 = count - 1;
      a = 0.0f;
    } else {
      i0 = static_cast<int>(std::floor(f));
      i1 = i0 + 1;
      a = static_cast<float>(f - i0);
    }
  };

  ImageBuffer out(w, h);
  for (int y = 0; y < h; ++y) {
    int y0, y1;
    float ay;
    neighbours(y, th, tiles_y, y0, y1, ay);
    for (int x = 0; x < w; ++x) {
      int x0, x1;
      float ax;
      neighbours(x, tw, tiles_x, x0, x1, ax);
      const auto b = static_cast<std::size_t>(
          bins[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)]);
      auto lut = [&](int tx, int ty) { return luts[static_cast<std::size_t>(ty * tiles_x + tx)][b]; };
      const float top = lut(x0, y0) + ax * (lut(x1, y0) - lut(x0, y0));
      const float bot = lut(x0, y1) + ax * (lut(x1, y1) - lut(x0, y1));
      // Identity tiles contribute an exact zero.
      const float delta = top + ay * (bot - top);
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = img.at(x, y, c) + delta;
    }
  }
  out.clamp();
  return out;
}

}  // namespace cbench
