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

#include "cbench/quality.hpp"

#include <cmath>
#include <vector>

#include "cbench/error.hpp"
#include "cbench/filter.hpp"

namespace cbench {
namespace {

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

void require_same_shape(const ImageBuffer& a, const ImageBuffer& b) {
  if (!a.same_shape(b)) throw ParameterError("distortion requires equally sized images");
}

// "Valid" separable filtering of one channel: output is (w-10) x (h-10).
std::vector<double> filter_valid(const std::vector<double>& src, int w, int h,
                                 const std::vector<double>& taps) {
  const int ow = w - kWindow + 1;
  const int oh = h - kWindow + 1;
  std::vector<double> tmp(static_cast<std::size_t>(ow) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double a = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        a += taps[static_cast<std::size_t>(i)] * src[static_cast<std::size_t>(y * w + x + i)];
      }
      tmp[static_cast<std::size_t>(y * ow + x)] = a;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * static_cast<std::size_t>(oh));
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double a = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        a += taps[static_cast<std::size_t>(i)] * tmp[static_cast<std::size_t>((y + i) * ow + x)];
      }
      out[static_cast<std::size_t>(y * ow + x)] = a;
    }
  }
  return out;
}

std::vector<double> window_taps() {
  std::vector<double> taps(kWindow);
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double d = i - kWindow / 2;
    taps[static_cast<std::size_t>(i)] = std::exp(-0.5 * d * d / (kWindowSigma * kWindowSigma));
    sum += taps[static_cast<std::size_t>(i)];
  }
  for (double& t : taps) t /= sum;
  return taps;
}

}  // namespace

DistortionMeasure parse_distortion_measure(const std::string& name) {
  if (name == "mean_l2") return DistortionMeasure::mean_l2;
  if (name == "one_minus_ssim") return DistortionMeasure::one_minus_ssim;
  throw ParameterError("unknown distortion measure '" + name + "'");
}

double ssim(const ImageBuffer& a, const ImageBuffer& b) {
  require_same_shape(a, b);
  const int w = a.width();
  const int h = a.height();
  if (w < kWindow || h < kWindow) throw ParameterError("SSIM needs images of at least 11x11");
  const auto taps = window_taps();
  const std::size_t n = a.pixel_count();
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = da[3 * i + static_cast<std::size_t>(c)];
      y[i] = db[3 * i + static_cast<std::size_t>(c)];
      xx[i] = x[i] * x[i];
      yy[i] = y[i] * y[i];
      xy[i] = x[i] * y[i];
    }
    const auto mx = filter_valid(x, w, h, taps);
    const auto my = filter_valid(y, w, h, taps);
    const auto mxx = filter_valid(xx, w, h, taps);
    const auto myy = filter_valid(yy, w, h, taps);
    const auto mxy = filter_valid(xy, w, h, taps);
    double sum = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) {
      const double vx = mxx[i] - mx[i] * mx[i];
      const double vy = myy[i] - my[i] * my[i];
      const double cov = mxy[i] - mx[i] * my[i];
      const double num = (2.0 * mx[i] * my[i] + kC1) * (2.0 * cov + kC2);
      const double den = (mx[i] * mx[i] + my[i] * my[i] + kC1) * (vx + vy + kC2);
      sum += num / den;
    }
    total += sum / static_cast<double>(mx.size());
  }
  return total / 3.0;
}

double distortion(const ImageBuffer& a, const ImageBuffer& b, DistortionMeasure measure) {
  require_same_shape(a, b);
  if (measure == DistortionMeasure::one_minus_ssim) {
    return std::max(0.0, 1.0 - ssim(a, b));
  }
  auto da = a.data();
  auto db = b.data();
  double sum = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(da.size()));
}

}  // namespace cbench
