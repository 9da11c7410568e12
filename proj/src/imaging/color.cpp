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

#include "cbench/color.hpp"

#include <algorithm>
#include <cmath>

namespace cbench {

Hsv rgb_to_hsv(float r, float g, float b) noexcept {
  const float mx = std::max({r, g, b});
  const float mn = std::min({r, g, b});
  const float delta = mx - mn;
  Hsv out{0.0f, 0.0f, mx};
  if (mx > 0.0f) out.s = delta / mx;
  if (delta > 0.0f) {
    float h;
    if (mx == r) {
      h = (g - b) / delta;
    } else if (mx == g) {
      h = 2.0f + (b - r) / delta;
    } else {
      h = 4.0f + (r - g) / delta;
    }
    h /= 6.0f;
    if (h < 0.0f) h += 1.0f;
    if (h >= 1.0f) h -= 1.0f;
    out.h = h;
  }
  return out;
}

void hsv_to_rgb(const Hsv& hsv, float& r, float& g, float& b) noexcept {
  const float v = hsv.v;
  const float s = hsv.s;
  if (s <= 0.0f) {
    r = g = b = v;
    return;
  }
  float h6 = hsv.h * 6.0f;
  if (h6 >= 6.0f) h6 -= 6.0f;
  const int sector = static_cast<int>(std::floor(h6));
  const float f = h6 - static_cast<float>(sector);
  const float p = v * (1.0f - s);
  const float q = v * (1.0f - s * f);
  const float t = v * (1.0f - s * (1.0f - f));
  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
  }
}

ImageBuffer rgb_to_hsv(const ImageBuffer& rgb) {
  ImageBuffer out(rgb.width(), rgb.height());
  auto src = rgb.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    const Hsv hsv = rgb_to_hsv(src[i], src[i + 1], src[i + 2]);
    dst[i] = hsv.h;
    dst[i + 1] = hsv.s;
    dst[i + 2] = hsv.v;
  }
  out.clamp();
  return out;
}

ImageBuffer hsv_to_rgb(const ImageBuffer& hsv) {
  ImageBuffer out(hsv.width(), hsv.height());
  auto src = hsv.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); i += 3) {
    hsv_to_rgb(Hsv{src[i], src[i + 1], src[i + 2]}, dst[i], dst[i + 1], dst[i + 2]);
  }
  out.clamp();
  return out;
}

}  // namespace cbench
