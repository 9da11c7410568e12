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
#include <filesystem>
#include <string>
#include <vector>

#include "cbench/image.hpp"

namespace cbench {

/// Deterministic natural-looking test image: a dead-leaves composition
/// (occluding shaded ellipses with power-law sizes) plus multi-octave texture
/// and a light optical blur. Its spectrum falls off roughly as 1/f.
ImageBuffer synthetic_image(int width, int height, std::uint64_t seed, int index);

/// Writes `count` synthetic PNG images named img_000.png ... into dir and
/// returns their paths.
std::vector<std::filesystem::path> write_synthetic_corpus(const std::filesystem::path& dir, int count,
                                                          int width, int height, std::uint64_t seed);

}  // namespace cbench
