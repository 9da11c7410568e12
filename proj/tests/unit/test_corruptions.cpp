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

#include <set>

#include "cbench/corruptions.hpp"
#include "cbench/error.hpp"
#include "cbench/filter.hpp"
#include "cbench/hash.hpp"
#include "cbench/quality.hpp"
#include "support.hpp"

using namespace cbench;
using cbench::testing::smooth_image;

namespace {

const SeveritySchedule& sched() {
  static const SeveritySchedule s = SeveritySchedule::defaults();
  return s;
}

double mean_luma(const ImageBuffer& img) {
  double s = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) s += luma(img, x, y);
  }
  return s / static_cast<double>(img.pixel_count());
}

}  // namespace

TEST_CASE("every kind preserves shape and range and is deterministic") {
  const ImageBuffer img = smooth_image(48, 40, 1);
  for (auto kind : all_corruption_kinds()) {
    for (int s = 1; s <= 5; ++s) {
      CAPTURE(name(kind));
      CAPTURE(s);
      const CorruptionSpec spec{kind, s, derive_corruption_seed(7, "img", kind, s)};
      const ImageBuffer a = apply_corruption(img, spec, sched());
      CHECK(a.same_shape(img));
      CHECK(cbench::testing::in_unit_range(a));
      CHECK(a == apply_corruption(img, spec, sched()));
    }
  }
}

TEST_CASE("gaussian noise with zero sigma is the identity") {
  const ImageBuffer img = smooth_image(32, 32, 2);
  SeveritySchedule s = sched();
  s.set(CorruptionKind::gaussian_noise, "sigma", {0, 0, 0, 0, 0});
  CHECK(apply_corruption(img, {CorruptionKind::gaussian_noise, 3, 11}, s) == img);
  RandomStream rs(1);
  CHECK(corrupt_noise(img, GaussianNoise{0.0}, rs) == img);
}

TEST_CASE("impulse severity 5 distorts more than severity 1") {
  double d1 = 0.0;
  double d5 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ImageBuffer img = smooth_image(32, 32, static_cast<std::uint64_t>(i));
    const std::string id = "img" + std::to_string(i);
    d1 += distortion(img, apply_corruption(img, {CorruptionKind::impulse_noise, 1, derive_corruption_seed(1, id, CorruptionKind::impulse_noise, 1)}, sched()), DistortionMeasure::mean_l2);
    d5 += distortion(img, apply_corruption(img, {CorruptionKind::impulse_noise, 5, derive_corruption_seed(1, id, CorruptionKind::impulse_noise, 5)}, sched()), DistortionMeasure::mean_l2);
  }
  CHECK(d5 > d1);
}

TEST_CASE("apply_corruption parameter errors") {
  const ImageBuffer img(32, 32, 0.5f);
  CHECK_THROWS_AS(apply_corruption(img, {CorruptionKind::fog, 0, 1}, sched()), ParameterError);
  CHECK_THROWS_AS(apply_corruption(img, {CorruptionKind::fog, 6, 1}, sched()), ParameterError);
  CHECK_THROWS_AS(apply_corruption(ImageBuffer(8, 32), {CorruptionKind::fog, 1, 1}, sched()), ParameterError);
  CHECK_THROWS_AS(apply_corruption(img, {static_cast<CorruptionKind>(99), 1, 1}, sched()), ParameterError);
}

TEST_CASE("impulse with p=1 replaces every sample") {
  RandomStream rs(3);
  const ImageBuffer out = corrupt_noise(smooth_image(40, 40, 3), ImpulseNoise{1.0}, rs);
  std::size_t zeros = 0;
  for (float v : out.data()) {
    CHECK((v == 0.0f || v == 1.0f));
    zeros += v == 0.0f ? 1 : 0;
  }
  CHECK(static_cast<double>(zeros) / static_cast<double>(out.size()) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("gaussian noise on mid-gray is zero mean with the right spread") {
  const ImageBuffer gray(1000, 1000, 0.5f);
  RandomStream rs(4, {"mc"});
  const ImageBuffer out = corrupt_noise(gray, GaussianNoise{0.1}, rs);
  double sum = 0.0;
  double sq = 0.0;
  for (float v : out.data()) {
    sum += v;
    sq += (v - 0.5) * (v - 0.5);
  }
  const double n = static_cast<double>(out.size());
  CHECK(std::abs(sum / n - 0.5) < 0.001);
  CHECK(std::sqrt(sq / n) == doctest::Approx(0.1).epsilon(0.05));
}

TEST_CASE("speckle on black stays black") {
  RandomStream rs(5);
  CHECK(corrupt_noise(ImageBuffer(32, 32, 0.0f), SpeckleNoise{0.6}, rs) == ImageBuffer(32, 32, 0.0f));
}

TEST_CASE("shot noise is unbiased on average") {
  const ImageBuffer gray(300, 300, 0.4f);
  RandomStream rs(6);
  const ImageBuffer out = corrupt_noise(gray, ShotNoise{25.0}, rs);
  double sum = 0.0;
  for (float v : out.data()) sum += v;
  CHECK(sum / static_cast<double>(out.size()) == doctest::Approx(0.4).epsilon(0.01));
}

TEST_CASE("noise parameter errors") {
  const ImageBuffer img(16, 16, 0.5f);
  RandomStream rs(7);
  CHECK_THROWS_AS(corrupt_noise(img, GaussianNoise{-0.1}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_noise(img, ShotNoise{0.0}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_noise(img, ImpulseNoise{1.1}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_noise(img, ImpulseNoise{-0.1}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_noise(img, SpeckleNoise{-1.0}, rs), ParameterError);
}

TEST_CASE("blur identities") {
  const ImageBuffer img = smooth_image(40, 40, 8);
  RandomStream rs(8);
  CHECK(corrupt_blur(img, DefocusBlur{0.2}, rs) == img);
  CHECK(corrupt_blur(img, ZoomBlur{{1.0}}, rs) == img);
  CHECK(corrupt_blur(img, GaussianBlur{0.0}, rs) == img);
  const ImageBuffer flat(40, 40, 0.3f);
  CHECK(cbench::testing::max_abs_diff(corrupt_blur(flat, MotionBlur{9.0}, rs), flat) < 1e-6);
  CHECK_THROWS_AS(corrupt_blur(img, ZoomBlur{{}}, rs), ParameterError);
}

TEST_CASE("zoom factor ladder") {
  const auto z = zoom_factors(1.1, 0.02);
  REQUIRE(z.size() == 6);
  CHECK(z.front() == 1.0);
  CHECK(z.back() == doctest::Approx(1.1));
  CHECK(zoom_factors(1.0, 0.01).size() == 1);
}

TEST_CASE("glass blur moves pixels locally") {
  const ImageBuffer img = smooth_image(40, 40, 9);
  RandomStream a(9);
  RandomStream b(9);
  const ImageBuffer g = corrupt_blur(img, GlassBlur{0.7, 1, 2}, a);
  CHECK(g == corrupt_blur(img, GlassBlur{0.7, 1, 2}, b));
  CHECK(g != img);
  RandomStream c(9);
  CHECK(cbench::testing::max_abs_diff(corrupt_blur(img, GlassBlur{0.0, 0, 3}, c), img) == 0.0);
}

TEST_CASE("fog weight zero is the identity") {
  const ImageBuffer img = smooth_image(40, 40, 10);
  RandomStream rs(10);
  CHECK(corrupt_weather(img, Fog{0.0, 0.6, 0.5}, rs) == img);
  CHECK_THROWS_AS(corrupt_weather(img, Fog{1.2, 0.6, 0.5}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_weather(img, Fog{-0.1, 0.6, 0.5}, rs), ParameterError);
}

TEST_CASE("fog brightens with severity") {
  double prev = -1.0;
  for (int s = 1; s <= 5; ++s) {
    double total = 0.0;
    for (int i = 0; i < 8; ++i) {
      const ImageBuffer img = smooth_image(48, 48, static_cast<std::uint64_t>(i));
      const std::string id = "f" + std::to_string(i);
      total += mean_luma(apply_corruption(img, {CorruptionKind::fog, s, derive_corruption_seed(3, id, CorruptionKind::fog, s)}, sched()));
    }
    CHECK(total > prev);
    prev = total;
  }
}

TEST_CASE("brightness on black sets V to the delta") {
  RandomStream rs(11);
  const ImageBuffer out = corrupt_weather(ImageBuffer(20, 20, 0.0f), Brightness{0.3}, rs);
  for (float v : out.data()) CHECK(v == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("snow only brightens") {
  const ImageBuffer img = smooth_image(48, 48, 12);
  RandomStream rs(12);
  const ImageBuffer out = corrupt_weather(img, Snow{0.3, 0.3, 3, 0.4, 10, 0.5}, rs);
  for (std::size_t i = 0; i < img.size(); ++i) CHECK(out.data()[i] >= img.data()[i] - 1e-6f);
}

TEST_CASE("frost with a user texture") {
  const ImageBuffer img = smooth_image(48, 48, 13);
  const std::vector<ImageBuffer> textures{ImageBuffer(20, 30, 1.0f)};
  RandomStream rs(13);
  const ImageBuffer out = corrupt_weather(img, Frost{0.5, 0.5, textures}, rs);
  for (std::size_t i = 0; i < img.size(); ++i) CHECK(out.data()[i] == doctest::Approx(std::min(1.0, 0.5 * img.data()[i] + 0.5)).epsilon(1e-5));
}

TEST_CASE("procedural frost is in range and image specific") {
  RandomStream a(1, {"a"});
  RandomStream b(1, {"b"});
  const Plane fa = procedural_frost(64, 48, a);
  const Plane fb = procedural_frost(64, 48, b);
  CHECK(fa.width() == 64);
  CHECK(fa.height() == 48);
  CHECK(!(fa == fb));
  for (float v : fa.data()) {
    CHECK(v >= 0.0f);
    CHECK(v <= 1.0f);
  }
}

TEST_CASE("spatter modes") {
  const ImageBuffer img = smooth_image(48, 48, 14);
  RandomStream a(14);
  RandomStream b(14);
  const ImageBuffer water = corrupt_weather(img, Spatter{0.5, 3, 0.6, false}, a);
  const ImageBuffer mud = corrupt_weather(img, Spatter{0.5, 3, 0.9, true}, b);
  CHECK(water != img);
  CHECK(distortion(img, mud, DistortionMeasure::mean_l2) > distortion(img, water, DistortionMeasure::mean_l2));
  RandomStream c(14);
  CHECK(corrupt_weather(img, Spatter{0.5, 3, 0.0, true}, c) == img);
}

TEST_CASE("digital identities") {
  const ImageBuffer img = smooth_image(40, 40, 15);
  RandomStream rs(15);
  CHECK(corrupt_digital(img, Contrast{1.0}, rs) == img);
  CHECK(corrupt_digital(img, Pixelate{1.0}, rs) == img);
  CHECK(corrupt_digital(img, Elastic{0.0, 4.0}, rs) == img);
  CHECK(cbench::testing::max_abs_diff(corrupt_digital(img, Saturate{1.0, 0.0}, rs), img) < 1e-5);
}

TEST_CASE("contrast zero collapses to per-channel means") {
  const ImageBuffer img = smooth_image(40, 40, 16);
  RandomStream rs(16);
  const ImageBuffer out = corrupt_digital(img, Contrast{0.0}, rs);
  for (int c = 0; c < 3; ++c) {
    double m = 0.0;
    for (int y = 0; y < 40; ++y) {
      for (int x = 0; x < 40; ++x) m += img.at(x, y, c);
    }
    m /= 1600.0;
    CHECK(out.at(5, 7, c) == doctest::Approx(m).epsilon(1e-6));
    CHECK(out.at(31, 2, c) == out.at(5, 7, c));
  }
}

TEST_CASE("pixelate produces blocks") {
  const ImageBuffer img = cbench::testing::random_image(40, 40, 17);
  RandomStream rs(17);
  const ImageBuffer out = corrupt_digital(img, Pixelate{4.0}, rs);
  for (int y = 0; y < 40; y += 4) {
    for (int x = 0; x < 40; x += 4) {
      for (int k = 1; k < 4; ++k) CHECK(out.at(x + k, y + k, 0) == out.at(x, y, 0));
    }
  }
}

TEST_CASE("digital parameter errors") {
  const ImageBuffer img(32, 32, 0.5f);
  RandomStream rs(18);
  CHECK_THROWS_AS(corrupt_digital(img, Jpeg{0}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_digital(img, Jpeg{101}, rs), ParameterError);
  CHECK_THROWS_AS(corrupt_digital(img, Pixelate{0.5}, rs), ParameterError);
}

TEST_CASE("jpeg lowers quality monotonically") {
  const ImageBuffer img = cbench::testing::random_image(64, 64, 19);
  RandomStream rs(19);
  const double d_hi = distortion(img, corrupt_digital(img, Jpeg{80}, rs), DistortionMeasure::mean_l2);
  const double d_lo = distortion(img, corrupt_digital(img, Jpeg{10}, rs), DistortionMeasure::mean_l2);
  CHECK(d_lo > d_hi);
}

TEST_CASE("random fields differ between images") {
  const ImageBuffer img = smooth_image(48, 48, 20);
  for (auto kind : {CorruptionKind::fog, CorruptionKind::snow, CorruptionKind::frost, CorruptionKind::glass_blur,
                    CorruptionKind::spatter, CorruptionKind::elastic}) {
    std::set<std::string> hashes;
    for (int i = 0; i < 10; ++i) {
      const std::string id = "item" + std::to_string(i);
      hashes.insert(content_hash(apply_corruption(img, {kind, 3, derive_corruption_seed(5, id, kind, 3)}, sched())));
    }
    CAPTURE(name(kind));
    CHECK(hashes.size() == 10);
  }
}
