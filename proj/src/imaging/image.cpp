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

#include "cbench/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cbench/error.hpp"

namespace cbench {

ImageBuffer::ImageBuffer(int width, int height, float fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw ParameterError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                         std::to_string(height));
  }
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * kChannels,
               fill);
}

void ImageBuffer::clamp() noexcept {
  for (float& v : data_) v = std::clamp(v, 0.0f, 1.0f);
}

Plane::Plane(int width, int height, float fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw ParameterError("plane dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

void require_benchmark_size(const ImageBuffer& img) {
  if (img.width() < kMinBenchmarkSide || img.height() < kMinBenchmarkSide) {
    throw ParameterError("image is " + std::to_string(img.width()) + "x" +
                         std::to_string(img.height()) + "; benchmark operations need at least " +
                         std::to_string(kMinBenchmarkSide) + "x" +
                         std::to_string(kMinBenchmarkSide));
  }
}

float luma(const ImageBuffer& img, int x, int y) noexcept {
  return 0.299f * img.at(x, y, 0) + 0.587f * img.at(x, y, 1) + 0.114f * img.at(x, y, 2);
}

Kernel2D::Kernel2D() : size_(1), weights_{1.0} {}

Kernel2D::Kernel2D(int size, std::vector<double> weights) : size_(size), weights_(std::move(weights)) {
  if (size < 1 || size % 2 == 0) {
    throw ParameterError("kernel size must be a positive odd integer, got " + std::to_string(size));
  }
  if (weights_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw ParameterError("kernel weight count does not match size*size");
  }
}

double Kernel2D::sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

Kernel2D Kernel2D::normalized() const {
  const double s = sum();
  if (s == 0.0) throw ParameterError("cannot normalize a kernel whose weights sum to zero");
  std::vector<double> w(weights_);
  for (double& v : w) v /= s;
  return Kernel2D(size_, std::move(w));
}

}  // namespace cbench
