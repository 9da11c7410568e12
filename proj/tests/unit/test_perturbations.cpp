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

#include <cmath>
#include <numbers>
#include <vector>

#include "cbench/error.hpp"
#include "cbench/perturbations.hpp"
#include "cbench/quality.hpp"
#include "cbench/synthetic.hpp"
#include "support.hpp"

using namespace cbench;
using cbench::testing::in_unit_range;
using cbench::testing::max_abs_diff;
using cbench::testing::smooth_image;

namespace {

const SeveritySchedule& sched() {
  static const SeveritySchedule s = SeveritySchedule::defaults();
  return s;
}

PerturbationSpec spec_for(PerturbationKind kind, Difficulty d = Difficulty::normal, int n = 31) {
  return {kind, n, d, derive_perturbation_seed(5, "item", kind, d)};
}

double l2(const ImageBuffer& a, const ImageBuffer& b) {
  return distortion(a, b, DistortionMeasure::mean_l2);
}

const std::vector<ImageBuffer>& corpus() {
  static const std::vector<ImageBuffer> c = [] {
    std::vector<ImageBuffer> v;
    for (int i = 0; i < 4; ++i) v.push_back(synthetic_image(224, 224, 3, i));
    return v;
  }();
  return c;
}

// Intensity-weighted centroid of the pixels brighter than `floor` inside a window.
std::pair<double, double> centroid(const ImageBuffer& img, int x0, int y0, int x1, int y1, double floor = 0.5) {
  double sw = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const double v = img.at(x, y, 0);
      if (v <= floor) continue;
      sw += v;
      sx += v * x;
      sy += v * y;
    }
  }
  return {sx / sw, sy / sw};
}

ImageBuffer dot_grid(int side, int offset, int radius) {
  ImageBuffer img(side, side, 0.0f);
  const double c = (side - 1) / 2.0;
  for (int qy : {-1, 1}) {
    for (int qx : {-1, 1}) {
      const double px = c + qx * offset;
      const double py = c + qy * offset;
      for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
          if (std::hypot(x - px, y - py) <= radius) {
            for (int ch = 0; ch < 3; ++ch) img.at(x, y, ch) = 1.0f;
          }
        }
      }
    }
  }
  return img;
}

}  // namespace

TEST_CASE("every kind yields the requested frame count, shape and range") {
  const ImageBuffer img = smooth_image(40, 32, 2);
  for (auto kind : all_perturbation_kinds()) {
    for (auto d : {Difficulty::normal, Difficulty::hard}) {
      CAPTURE(name(kind));
      const auto seq = generate_sequence(img, spec_for(kind, d, 33), sched());
      REQUIRE(seq.frames.size() == 33);
      CHECK(seq.mode == sequence_mode(kind));
      CHECK(seq.frames[0] == img);
      for (const auto& f : seq.frames) {
        CHECK(f.same_shape(img));
        CHECK(in_unit_range(f));
      }
    }
  }
}

TEST_CASE("sequences are deterministic and depend on the seed") {
  const ImageBuffer img = smooth_image(40, 40, 3);
  for (auto kind : {PerturbationKind::gaussian_noise, PerturbationKind::snow, PerturbationKind::tilt,
                    PerturbationKind::motion_blur, PerturbationKind::spatter}) {
    CAPTURE(name(kind));
    const auto spec = spec_for(kind);
    const auto a = generate_sequence(img, spec, sched());
    const auto b = generate_sequence(img, spec, sched());
    CHECK(a.frames == b.frames);
    auto other = spec;
    other.seed = derive_perturbation_seed(6, "item", kind, Difficulty::normal);
    CHECK(generate_sequence(img, other, sched()).frames != a.frames);
  }
}

TEST_CASE("mode mismatches and short sequences are rejected") {
  const ImageBuffer img = smooth_image(32, 32, 4);
  CHECK_THROWS_AS(gen_noise_sequence(img, spec_for(PerturbationKind::translate), sched()), ParameterError);
  CHECK_THROWS_AS(gen_temporal_sequence(img, spec_for(PerturbationKind::shot_noise), sched()), ParameterError);
  CHECK_THROWS_AS(generate_sequence(img, spec_for(PerturbationKind::rotate, Difficulty::normal, 30), sched()),
                  ParameterError);
  CHECK_THROWS_AS(generate_sequence(ImageBuffer(8, 8), spec_for(PerturbationKind::rotate), sched()),
                  ParameterError);
}

TEST_CASE("zero noise amplitude leaves every frame equal to the source") {
  const ImageBuffer img = smooth_image(32, 32, 5);
  SeveritySchedule s = sched();
  s.set_perturbation_param(PerturbationKind::gaussian_noise, "sigma", 0.0);
  s.set_perturbation_param(PerturbationKind::speckle_noise, "sigma", 0.0);
  for (auto kind : {PerturbationKind::gaussian_noise, PerturbationKind::speckle_noise}) {
    const auto seq = gen_noise_sequence(img, spec_for(kind), s);
    for (const auto& f : seq.frames) CHECK(f == img);
  }
}

TEST_CASE("noise frames are independent draws around the clean frame") {
  const ImageBuffer img(64, 64, 0.5f);
  const auto seq = gen_noise_sequence(img, spec_for(PerturbationKind::gaussian_noise), sched());
  const double sigma = sched().perturbation_param(PerturbationKind::gaussian_noise, "sigma");
  std::vector<double> d;
  for (std::size_t j = 1; j < seq.frames.size(); ++j) d.push_back(l2(seq.frames[0], seq.frames[j]));
  // RMS of N(0, sigma) over 12288 samples: relative error ~ 1/sqrt(2N)
  for (double v : d) CHECK(v == doctest::Approx(sigma).epsilon(0.03));
  // least-squares slope of d against j, relative to sigma per frame
  double sj = 0.0, sd = 0.0, sjj = 0.0, sjd = 0.0;
  const double n = static_cast<double>(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double j = static_cast<double>(i + 1);
    sj += j;
    sd += d[i];
    sjj += j * j;
    sjd += j * d[i];
  }
  const double slope = (n * sjd - sj * sd) / (n * sjj - sj * sj);
  CHECK(std::abs(slope) * n < 0.02 * sigma);
  // consecutive noise frames differ from each other too
  CHECK(seq.frames[1] != seq.frames[2]);
}

TEST_CASE("hard noise doubles the amplitude") {
  const ImageBuffer img(64, 64, 0.5f);
  for (auto kind : {PerturbationKind::gaussian_noise, PerturbationKind::shot_noise,
                    PerturbationKind::speckle_noise}) {
    CAPTURE(name(kind));
    const auto normal = gen_noise_sequence(img, spec_for(kind), sched());
    const auto hard = gen_noise_sequence(img, spec_for(kind, Difficulty::hard), sched());
    const double ratio = l2(hard.frames[0], hard.frames[5]) / l2(normal.frames[0], normal.frames[5]);
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("translate slides the content one column per frame") {
  const ImageBuffer img = cbench::testing::random_image(40, 30, 9);
  const auto seq = gen_temporal_sequence(img, spec_for(PerturbationKind::translate), sched());
  for (std::size_t j = 1; j < seq.frames.size(); ++j) {
    const auto& prev = seq.frames[j - 1];
    const auto& cur = seq.frames[j];
    bool ok = true;
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x + 1 < img.width(); ++x) {
        for (int c = 0; c < 3; ++c) ok = ok && cur.at(x, y, c) == prev.at(x + 1, y, c);
      }
    }
    CHECK(ok);
  }
  // clamp fill repeats the last source column
  CHECK(seq.frames[5].at(39, 7, 1) == img.at(39, 7, 1));
}

TEST_CASE("translate with black fill darkens the entering columns") {
  const ImageBuffer img(32, 32, 0.7f);
  auto spec = spec_for(PerturbationKind::translate);
  spec.fill = Boundary::black;
  const auto seq = gen_temporal_sequence(img, spec, sched());
  CHECK(seq.frames[3].at(31, 0, 0) == 0.0f);
  CHECK(seq.frames[3].at(27, 0, 0) == doctest::Approx(0.7f));
}

TEST_CASE("hard translate moves two columns per frame") {
  const ImageBuffer img = cbench::testing::random_image(40, 30, 10);
  const auto seq = gen_temporal_sequence(img, spec_for(PerturbationKind::translate, Difficulty::hard), sched());
  CHECK(seq.frames[3].at(10, 4, 2) == img.at(16, 4, 2));
}

TEST_CASE("zero step geometric sequences repeat the source") {
  const ImageBuffer img = smooth_image(40, 40, 11);
  SeveritySchedule s = sched();
  s.set_perturbation_param(PerturbationKind::rotate, "step_degrees", 0.0);
  s.set_perturbation_param(PerturbationKind::shear, "step", 0.0);
  s.set_perturbation_param(PerturbationKind::scale, "step_factor", 1.0);
  s.set_perturbation_param(PerturbationKind::tilt, "max_step_degrees", 0.0);
  s.set_perturbation_param(PerturbationKind::brightness, "step", 0.0);
  for (auto kind : {PerturbationKind::rotate, PerturbationKind::shear, PerturbationKind::scale,
                    PerturbationKind::tilt}) {
    CAPTURE(name(kind));
    const auto seq = gen_temporal_sequence(img, spec_for(kind), s);
    for (const auto& f : seq.frames) CHECK(max_abs_diff(f, img) < 1e-6);
  }
  const auto bright = gen_temporal_sequence(img, spec_for(PerturbationKind::brightness), s);
  for (const auto& f : bright.frames) CHECK(max_abs_diff(f, img) < 1e-5);
}

TEST_CASE("scale magnifies by step_factor^30 over 31 frames") {
  const ImageBuffer grid = dot_grid(224, 50, 4);
  const double f = sched().perturbation_param(PerturbationKind::scale, "step_factor");
  const auto seq = gen_temporal_sequence(grid, spec_for(PerturbationKind::scale), sched());
  const double c = (224 - 1) / 2.0;
  double before = 0.0;
  double after = 0.0;
  for (int qy : {0, 1}) {
    for (int qx : {0, 1}) {
      const int x0 = qx * 112;
      const int y0 = qy * 112;
      const auto [ax, ay] = centroid(seq.frames[0], x0, y0, x0 + 112, y0 + 112);
      const auto [bx, by] = centroid(seq.frames[30], x0, y0, x0 + 112, y0 + 112);
      before += std::hypot(ax - c, ay - c);
      after += std::hypot(bx - c, by - c);
    }
  }
  CHECK(after / before == doctest::Approx(std::pow(f, 30)).epsilon(0.02));
}

TEST_CASE("rotate turns a dot about the centre") {
  const ImageBuffer grid = dot_grid(129, 40, 3);
  const ImageBuffer r = rotate(grid, 90.0);
  // a quarter turn maps the dot set onto itself
  CHECK(max_abs_diff(r, grid) < 1e-4);
  const ImageBuffer r30 = rotate(grid, 30.0);
  const auto [x, y] = centroid(r30, 64, 64, 129, 129);
  const double c = 64.0;
  // the dot 45 degrees below the +x axis (y down) moves up toward it
  const double a = std::atan2(y - c, x - c);
  CHECK(a == doctest::Approx(std::atan2(40.0, 40.0) - 30.0 * std::numbers::pi / 180.0).epsilon(0.01));
}

TEST_CASE("shear displaces rows in proportion to their distance from the centre") {
  const ImageBuffer img = cbench::testing::random_image(41, 41, 12);
  const ImageBuffer s = shear(img, 0.1);
  // row 30 is 10 rows below centre: out(x) = in(x + 1)
  for (int x = 0; x < 40; ++x) CHECK(s.at(x, 30, 0) == img.at(x + 1, 30, 0));
  for (int x = 0; x < 41; ++x) CHECK(s.at(x, 20, 1) == img.at(x, 20, 1));
}

TEST_CASE("tilt matches a direct pinhole projection of the rotated plane") {
  // vertical stripe at plane coordinate s from the centre; rotating the plane
  // by b about the vertical axis moves it to (s cos b, 0, f - s sin b), which
  // projects to dx = f s cos b / (f - s sin b)
  const int w = 201;
  const double f = w;
  const double cx = (w - 1) / 2.0;
  const double s = 60.0;
  ImageBuffer img(w, 101, 0.0f);
  for (int y = 0; y < img.height(); ++y) {
    for (int c = 0; c < 3; ++c) img.at(static_cast<int>(cx + s), y, c) = 1.0f;
  }
  for (double deg : {-8.0, 5.0, 12.0}) {
    CAPTURE(deg);
    const double b = deg * std::numbers::pi / 180.0;
    const double expect = cx + f * s * std::cos(b) / (f - s * std::sin(b));
    const ImageBuffer t = tilt(img, 0.0, deg, Boundary::black);
    const auto [x, y] = centroid(t, 0, 45, w, 56, 0.0);
    (void)y;
    CHECK(x == doctest::Approx(expect).epsilon(0.002));
  }
  CHECK(max_abs_diff(tilt(img, 0.0, 0.0), img) < 1e-6);
}

TEST_CASE("tilt about the horizontal axis keeps the centre row fixed") {
  const ImageBuffer img = cbench::testing::random_image(64, 65, 13);
  const ImageBuffer t = tilt(img, 6.0, 0.0);
  for (int x = 0; x < 64; ++x) CHECK(t.at(x, 32, 0) == doctest::Approx(img.at(x, 32, 0)).epsilon(1e-4));
  CHECK(max_abs_diff(t, img) > 0.05);
}

TEST_CASE("temporal steps stay small at normal difficulty") {
  for (auto kind : all_perturbation_kinds()) {
    if (sequence_mode(kind) != SequenceMode::temporal) continue;
    CAPTURE(name(kind));
    std::vector<double> step(31, 0.0);
    for (std::size_t i = 0; i < corpus().size(); ++i) {
      auto spec = spec_for(kind);
      spec.seed = derive_perturbation_seed(5, "img_" + std::to_string(i), kind, Difficulty::normal);
      const auto seq = gen_temporal_sequence(corpus()[i], spec, sched());
      for (int j = 1; j < 31; ++j) step[j] += l2(seq.frames[j - 1], seq.frames[j]) / corpus().size();
    }
    for (int j = 1; j < 31; ++j) CHECK(step[j] < 0.05);
  }
}

TEST_CASE("geometric and brightness drift grows with the frame index") {
  for (auto kind : {PerturbationKind::translate, PerturbationKind::rotate, PerturbationKind::scale,
                    PerturbationKind::shear, PerturbationKind::brightness}) {
    CAPTURE(name(kind));
    std::vector<double> drift(31, 0.0);
    for (std::size_t i = 0; i < corpus().size(); ++i) {
      const auto seq = gen_temporal_sequence(corpus()[i], spec_for(kind), sched());
      for (int j = 0; j < 31; ++j) drift[j] += l2(seq.frames[0], seq.frames[j]);
    }
    for (int j = 1; j < 31; ++j) CHECK(drift[j] >= drift[j - 1]);
  }
}

TEST_CASE("hard temporal sequences move further than normal ones") {
  const ImageBuffer& img = corpus()[0];
  for (auto kind : all_perturbation_kinds()) {
    if (sequence_mode(kind) != SequenceMode::temporal) continue;
    CAPTURE(name(kind));
    const auto normal = gen_temporal_sequence(img, spec_for(kind), sched());
    const auto hard = gen_temporal_sequence(img, spec_for(kind, Difficulty::hard), sched());
    CHECK(l2(hard.frames[0], hard.frames[10]) > l2(normal.frames[0], normal.frames[10]));
  }
}
