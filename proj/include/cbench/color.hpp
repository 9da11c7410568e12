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

#include "cbench/image.hpp"

namespace cbench {

struct Hsv {
  float h;  ///< hue in [0,1), fraction of a full turn
  float s;
  float v;
};

/// Hexcone conversion of one pixel.
Hsv rgb_to_hsv(float r, float g, float b) noexcept;
void hsv_to_rgb(const Hsv& hsv, float& r, float& g, float& b) noexcept;

/// Whole-raster conversion; the returned buffer holds (H, S, V) per pixel,
/// all in [0,1].
ImageBuffer rgb_to_hsv(const ImageBuffer& rgb);
ImageBuffer hsv_to_rgb(const ImageBuffer& hsv);

}  // namespace cbench
