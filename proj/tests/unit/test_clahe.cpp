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

#include "doctest.h"

#include "cbench/clahe.hpp"
#include "cbench/error.hpp"
#include "support.hpp"

using namespace cbench;

TEST_CASE("constant image is unchanged") {
  const ImageBuffer img(32, 32, 0.4f);
  CHECK(clahe(img, 2.0, 4, 4) == img);
}

TEST_CASE("two-level image is pushed apart") {
  // 8x8, left half 0.2 (bin 51), right half 0.8 (bin 204), one tile.
  // No effective clip: cdf(51)=32, cdf(204)=64, cdf_min=32 -> 0 and 1.
  // Clip 2: limit max(1, 2*64/256) = 1, excess 62 spread as 62/256 per bin.
  //   cdf(b) = (b+1)*62/256 + [b>=51] + [b>=204], cdf_min = 62/256
  //   map(51) = (52*62/256 + 1 - 62/256) / (64 - 62/256)
  //   map(204) = (205*62/256 + 2 - 62/256) / (64 - 62/256)
  ImageBuffer img(8, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = x < 4 ? 0.2f : 0.8f;
    }
  }
  const ImageBuffer out = clahe(img, 1000.0, 1, 1);
  CHECK(out.at(0, 0, 0) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(out.at(7, 7, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(out.at(7, 7, 0) - out.at(0, 0, 0) > 0.8f - 0.2f);

  const double e = 62.0 / 256.0;
  const double lo = (52 * e + 1 - e) / (64 - e);
  const double hi = (205 * e + 2 - e) / (64 - e);
  const ImageBuffer clipped = clahe(img, 2.0, 1, 1);
  CHECK(clipped.at(0, 0, 0) == doctest::Approx(lo).epsilon(1e-5));
  CHECK(clipped.at(7, 0, 2) == doctest::Approx(hi).epsilon(1e-5));
}

TEST_CASE("output stays in range for random inputs") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const ImageBuffer out = clahe(cbench::testing::random_image(37, 29, s), 2.0, 3, 2);
    CHECK(out.same_shape(ImageBuffer(37, 29)));
    CHECK(cbench::testing::in_unit_range(out));
  }
}

TEST_CASE("chroma offsets are preserved where unclamped") {
  ImageBuffer img = cbench::testing::smooth_image(32, 32, 5);
  for (float& v : img.data()) v = 0.3f + 0.4f * v;
  const ImageBuffer out = clahe(img, 1.5, 2, 2);
  for (int y = 0; y < 32; y += 5) {
    for (int x = 0; x < 32; x += 5) {
      const float d_in = img.at(x, y, 0) - img.at(x, y, 1);
      const float d_out = out.at(x, y, 0) - out.at(x, y, 1);
      if (out.at(x, y, 0) > 0.0f && out.at(x, y, 0) < 1.0f && out.at(x, y, 1) > 0.0f && out.at(x, y, 1) < 1.0f) {
        CHECK(d_out == doctest::Approx(d_in).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("parameter errors") {
  const ImageBuffer img(16, 16, 0.5f);
  CHECK_THROWS_AS(clahe(img, 0.0, 2, 2), ParameterError);
  CHECK_THROWS_AS(clahe(img, -1.0, 2, 2), ParameterError);
  CHECK_THROWS_AS(clahe(img, 2.0, 0, 2), ParameterError);
}
