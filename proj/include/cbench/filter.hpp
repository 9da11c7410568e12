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
#include <vector>

#include "cbench/image.hpp"

namespace cbench {

/// Out-of-range sample rule for convolutions and warps.
///   reflect: mirror without repeating the edge sample (d c b | a b c d | c b a)
///   clamp:   repeat the edge sample
///   black:   zero (warps only)
enum class Boundary { reflect, clamp, black };

/// Maps an arbitrary integer coordinate into [0, n) under `b` (reflect or
/// clamp). Handles offsets of any magnitude.
int boundary_index(int i, int n, Boundary b) noexcept;

// ---------------------------------------------------------------------------
// Kernels

/// Normalized Gaussian truncated at 4 sigma. sigma <= 0 gives the identity.
Kernel2D gaussian_kernel(double sigma);
/// 1-D normalized Gaussian taps, truncated at 4 sigma.
std::vector<double> gaussian_taps(double sigma);
/// Normalized anti-aliased disk of the given radius (pixel coverage by 8x8
/// supersampling). radius < 0.5 gives the identity.
Kernel2D disk_kernel(double radius);
/// Normalized line segment of `length` pixels centred on the origin, at
/// `angle_deg` from the +x axis (counter-clockwise, y up). length <= 1 gives
/// the identity.
Kernel2D motion_kernel(double length, double angle_deg);
/// Normalized size x size box.
Kernel2D box_kernel(int size);

// ---------------------------------------------------------------------------
// Convolution

/// Per-channel discrete convolution (correlation with the kernel as laid out;
/// identical to convolution for the symmetric kernels used here). Output is
/// clamped to [0,1].
///
/// Throws ParameterError when kernel size >= min(width, height) or the
/// boundary is `black`.
ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2D& k,
                       Boundary boundary = Boundary::reflect);

/// Same arithmetic as convolve2d without the size restriction or clamping;
/// used internally by corruptions whose kernels may exceed small images.
ImageBuffer convolve_unclamped(const ImageBuffer& img, const Kernel2D& k, Boundary boundary);
Plane convolve(const Plane& p, const Kernel2D& k, Boundary boundary = Boundary::reflect);

/// Separable Gaussian blur (4-sigma truncation). sigma <= 0 returns a copy.
ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma,
                          Boundary boundary = Boundary::reflect);
Plane gaussian_blur(const Plane& p, double sigma, Boundary boundary = Boundary::reflect);

// ---------------------------------------------------------------------------
// Resampling and warps

enum class ResampleFilter { nearest, bilinear, box };

/// Resizes to w x h using pixel-centre alignment. `box` averages the exact
/// source footprint of each destination pixel (area resampling).
ImageBuffer resample(const ImageBuffer& img, int w, int h, ResampleFilter filter);

/// Bilinear sample at continuous pixel coordinates (pixel centres at
/// integers).
inline void sample_bilinear(const ImageBuffer& img, double x, double y, Boundary fill,
                            float out[3]) noexcept {
  const int w = img.width();
  const int h = img.height();
  if (fill == Boundary::black && (x < -0.5 || y < -0.5 || x > w - 0.5 || y > h - 0.5)) {
    out[0] = out[1] = out[2] = 0.0f;
    return;
  }
  const double fx = std::floor(x);
  const double fy = std::floor(y);
  const auto wx = static_cast<float>(x - fx);
  const auto wy = static_cast<float>(y - fy);
  const Boundary b = fill == Boundary::black ? Boundary::clamp : fill;
  const int x0 = boundary_index(static_cast<int>(fx), w, b);
  const int x1 = boundary_index(static_cast<int>(fx) + 1, w, b);
  const int y0 = boundary_index(static_cast<int>(fy), h, b);
  const int y1 = boundary_index(static_cast<int>(fy) + 1, h, b);
  for (int c = 0; c < 3; ++c) {
    const float top = img.at(x0, y0, c) + wx * (img.at(x1, y0, c) - img.at(x0, y0, c));
    const float bot = img.at(x0, y1, c) + wx * (img.at(x1, y1, c) - img.at(x0, y1, c));
    out[c] = top + wy * (bot - top);
  }
}

/// Inverse-mapped warp: destination pixel (x, y) takes the bilinear sample at
/// map(x, y) -> (sx, sy) in the source. Default fill is clamp-to-edge.
template <class InverseMap>
ImageBuffer warp(const ImageBuffer& img, InverseMap&& map, Boundary fill = Boundary::clamp) {
  ImageBuffer out(img.width(), img.height());
  float px[3];
  for (int y = 0; y < img.height(); ++y) {
    float* dst = out.row(y);
    for (int x = 0; x < img.width(); ++x) {
      double sx = 0.0;
      double sy = 0.0;
      map(static_cast<double>(x), static_cast<double>(y), sx, sy);
      sample_bilinear(img, sx, sy, fill, px);
      dst[3 * x] = px[0];
      dst[3 * x + 1] = px[1];
      dst[3 * x + 2] = px[2];
    }
  }
  out.clamp();
  return out;
}

/// Magnifies by `factor` about the image centre (a centre crop of size
/// 1/factor rescaled to full size). factor 1 reproduces the input exactly.
ImageBuffer zoom_about_center(const ImageBuffer& img, double factor,
                              Boundary fill = Boundary::clamp);

/// Plane bilinear upsample/downsample to w x h (pixel-centre aligned).
Plane resample_bilinear(const Plane& p, int w, int h);

}  // namespace cbench
