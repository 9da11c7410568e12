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

#include <string>

#include "cbench/image.hpp"

namespace cbench {

enum class DistortionMeasure {
  mean_l2,        ///< root mean squared difference over all samples
  one_minus_ssim  ///< 1 - mean SSIM (11x11 Gaussian window, sigma 1.5)
};

DistortionMeasure parse_distortion_measure(const std::string& name);

/// Non-negative, symmetric distortion between equally sized images. Throws
/// ParameterError on shape mismatch.
double distortion(const ImageBuffer& a, const ImageBuffer& b, DistortionMeasure measure);

/// Mean SSIM over the channels, evaluated on the window positions that fit
/// inside the image. C1 = (0.01)^2, C2 = (0.03)^2 for a dynamic range of 1.
double ssim(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace cbench
