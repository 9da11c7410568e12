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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "cbench/image.hpp"
#include "cbench/random.hpp"

namespace cbench::testing {

inline ImageBuffer random_image(int w, int h, std::uint64_t seed) {
  ImageBuffer img(w, h);
  RandomStream rs(seed, {"random_image"});
  for (float& v : img.data()) v = static_cast<float>(rs.uniform());
  return img;
}

// Smooth gradients plus a few edges; closer to photographs than white noise.
inline ImageBuffer smooth_image(int w, int h, std::uint64_t seed) {
  RandomStream rs(seed, {"smooth_image"});
  const double fx = rs.uniform(0.5, 3.0);
  const double fy = rs.uniform(0.5, 3.0);
  const double ph = rs.uniform(0.0, 6.28);
  const int edge = static_cast<int>(rs.integer(w / 4, 3 * w / 4));
  ImageBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double u = static_cast<double>(x) / w;
      const double v = static_cast<double>(y) / h;
      const double base = 0.5 + 0.3 * std::sin(6.28 * fx * u + ph) * std::cos(6.28 * fy * v);
      img.at(x, y, 0) = static_cast<float>(base);
      img.at(x, y, 1) = static_cast<float>(x < edge ? 0.8 * base : 0.2 + 0.6 * v);
      img.at(x, y, 2) = static_cast<float>(0.25 + 0.5 * u * v);
    }
  }
  img.clamp();
  return img;
}

inline double max_abs_diff(const ImageBuffer& a, const ImageBuffer& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(static_cast<double>(a.data()[i]) - b.data()[i]));
  }
  return m;
}

inline bool in_unit_range(const ImageBuffer& img) {
  for (float v : img.data()) {
    if (!(v >= 0.0f && v <= 1.0f)) return false;
  }
  return true;
}

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::temp_directory_path() / ("cbench_" + name + "_" +
                                                         std::to_string(::getpid()))) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace cbench::testing
