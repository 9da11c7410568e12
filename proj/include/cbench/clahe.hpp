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

/// Contrast Limited Adaptive Histogram Equalization on Rec.601 luma.
///
/// The image is split into tiles_x x tiles_y tiles (the last row/column of
/// tiles is extended by edge replication when the size does not divide).
/// Each tile gets a 256-bin luma histogram clipped at
/// clip_limit * tile_pixels / 256 with the excess spread uniformly, then the
/// mapping (cdf(v) - cdf_min) / (N - cdf_min). Per-pixel output is the
/// bilinear blend of the four nearest tile mappings. Chroma (Cb, Cr) is kept
/// by shifting all three channels by the luma change, then clamping.
///
/// A tile whose histogram occupies a single bin maps to the identity.
/// Throws ParameterError for clip_limit <= 0 or non-positive tile counts.
ImageBuffer clahe(const ImageBuffer& img, double clip_limit, int tiles_x, int tiles_y);

}  // namespace cbench
