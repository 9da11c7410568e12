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

#include <cstddef>
#include <span>
#include <vector>

namespace cbench {

/// Row-major H x W x 3 raster of sRGB-coded intensities in [0,1].
///
/// Every public operation of the toolkit returns buffers whose samples lie in
/// [0,1]; operations that can overshoot clamp before returning.
class ImageBuffer {
 public:
  static constexpr int kChannels = 3;

  ImageBuffer() = default;
  ImageBuffer(int width, int height, float fill = 0.0f);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return kChannels; }
  bool empty() const noexcept { return data_.empty(); }
  std::size_t size() const noexcept { return data_.size(); }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  float& at(int x, int y, int c) noexcept { return data_[index(x, y, c)]; }
  float at(int x, int y, int c) const noexcept { return data_[index(x, y, c)]; }

  float* row(int y) noexcept { return data_.data() + index(0, y, 0); }
  const float* row(int y) const noexcept { return data_.data() + index(0, y, 0); }

  std::span<float> data() noexcept { return data_; }
  std::span<const float> data() const noexcept { return data_; }

  void clamp() noexcept;
  bool same_shape(const ImageBuffer& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const ImageBuffer&) const = default;

 private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) * kChannels + static_cast<std::size_t>(c);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Single-channel float raster. Used for masks, height maps, displacement
/// fields and other intermediate layers; values are unconstrained.
class Plane {
 public:
  Plane() = default;
  Plane(int width, int height, float fill = 0.0f);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }

  float& at(int x, int y) noexcept {
    return data_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(x)];
  }
  float at(int x, int y) const noexcept {
    return data_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                 static_cast<std::size_t>(x)];
  }

  std::span<float> data() noexcept { return data_; }
  std::span<const float> data() const noexcept { return data_; }

  bool operator==(const Plane&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

/// Minimum side length accepted by benchmark operations.
inline constexpr int kMinBenchmarkSide = 16;

/// Throws ParameterError for buffers smaller than kMinBenchmarkSide.
void require_benchmark_size(const ImageBuffer& img);

/// Rec.601 luma of one pixel.
float luma(const ImageBuffer& img, int x, int y) noexcept;

/// Square convolution kernel of odd side length.
class Kernel2D {
 public:
  /// Identity (1x1, weight 1).
  Kernel2D();
  /// Throws ParameterError when size is even or weights.size() != size*size.
  Kernel2D(int size, std::vector<double> weights);

  int size() const noexcept { return size_; }
  int radius() const noexcept { return size_ / 2; }
  /// Weight at offset (dx, dy) from the centre, both in [-radius, radius].
  double at(int dx, int dy) const noexcept {
    return weights_[static_cast<std::size_t>(dy + radius()) * static_cast<std::size_t>(size_) +
                    static_cast<std::size_t>(dx + radius())];
  }
  std::span<const double> weights() const noexcept { return weights_; }

  double sum() const noexcept;
  /// Copy scaled to sum 1. Throws ParameterError if the sum is zero.
  Kernel2D normalized() const;

 private:
  int size_;
  std::vector<double> weights_;
};

}  // namespace cbench
