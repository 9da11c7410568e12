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

#include "cbench/filter.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "cbench/error.hpp"

namespace cbench {
namespace {

struct Tap {
  int dx;
  int dy;
  double w;
};

std::vector<Tap> sparse_taps(const Kernel2D& k) {
  std::vector<Tap> taps;
  const int r = k.radius();
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const double w = k.at(dx, dy);
      if (w != 0.0) taps.push_back({dx, dy, w});
    }
  }
  return taps;
}

std::vector<int> index_table(int n, int radius, Boundary b) {
  std::vector<int> table(static_cast<std::size_t>(n + 2 * radius));
  for (int i = -radius; i < n + radius; ++i) {
    table[static_cast<std::size_t>(i + radius)] = boundary_index(i, n, b);
  }
  return table;
}

void check_convolution_boundary(Boundary b) {
  if (b == Boundary::black) throw ParameterError("convolution supports reflect or clamp boundaries");
}

// Source footprint weights of destination samples for area resampling.
struct BoxWeights {
  std::vector<int> first;
  std::vector<std::vector<double>> weights;
};

BoxWeights box_weights(int src, int dst) {
  BoxWeights bw;
  bw.first.resize(static_cast<std::size_t>(dst));
  bw.weights.resize(static_cast<std::size_t>(dst));
  const double scale = static_cast<double>(src) / dst;
  for (int i = 0; i < dst; ++i) {
    const double lo = i * scale;
    const double hi = (i + 1) * scale;
    const int a = static_cast<int>(std::floor(lo));
    const int b = std::min(src, static_cast<int>(std::ceil(hi)));
    auto& w = bw.weights[static_cast<std::size_t>(i)];
    bw.first[static_cast<std::size_t>(i)] = a;
    for (int s = a; s < b; ++s) {
      const double overlap = std::min(hi, s + 1.0) - std::max(lo, static_cast<double>(s));
      w.push_back(std::max(0.0, overlap) / scale);
    }
  }
  return bw;
}

}  // namespace

int boundary_index(int i, int n, Boundary b) noexcept {
  if (i >= 0 && i < n) return i;
  if (n == 1) return 0;
  if (b == Boundary::reflect) {
    const int period = 2 * (n - 1);
    int m = i % period;
    if (m < 0) m += period;
    return m < n ? m : period - m;
  }
  return i < 0 ? 0 : n - 1;
}

// ---------------------------------------------------------------------------

std::vector<double> gaussian_taps(double sigma) {
  if (!(sigma > 0.0)) return {1.0};
  const int r = std::max(1, static_cast<int>(std::ceil(4.0 * sigma)));
  std::vector<double> taps(static_cast<std::size_t>(2 * r + 1));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    const double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
    taps[static_cast<std::size_t>(i + r)] = v;
    sum += v;
  }
  for (double& v : taps) v /= sum;
  return taps;
}

Kernel2D gaussian_kernel(double sigma) {
  const auto taps = gaussian_taps(sigma);
  const int size = static_cast<int>(taps.size());
  std::vector<double> w(taps.size() * taps.size());
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      w[static_cast<std::size_t>(y * size + x)] =
          taps[static_cast<std::size_t>(y)] * taps[static_cast<std::size_t>(x)];
    }
  }
  return Kernel2D(size, std::move(w)).normalized();
}

Kernel2D disk_kernel(double radius) {
  if (radius < 0.5) return Kernel2D();
  const int r = static_cast<int>(std::ceil(radius));
  const int size = 2 * r + 1;
  constexpr int kSub = 8;
  std::vector<double> w(static_cast<std::size_t>(size * size), 0.0);
  const double r2 = radius * radius;
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      int inside = 0;
      for (int sy = 0; sy < kSub; ++sy) {
        for (int sx = 0; sx < kSub; ++sx) {
          const double px = x - 0.5 + (sx + 0.5) / kSub;
          const double py = y - 0.5 + (sy + 0.5) / kSub;
          if (px * px + py * py <= r2) ++inside;
        }
      }
      w[static_cast<std::size_t>((y + r) * size + (x + r))] =
          static_cast<double>(inside) / (kSub * kSub);
    }
  }
  return Kernel2D(size, std::move(w)).normalized();
}

Kernel2D motion_kernel(double length, double angle_deg) {
  if (!(length > 1.0)) return Kernel2D();
  const int r = static_cast<int>(std::ceil(length / 2.0));
  const int size = 2 * r + 1;
  std::vector<double> w(static_cast<std::size_t>(size * size), 0.0);
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double ux = std::cos(theta);
  const double uy = -std::sin(theta);  // image rows grow downward
  const int samples = std::max(2, static_cast<int>(std::ceil(length * 4.0)));
  for (int i = 0; i < samples; ++i) {
    const double t = -length / 2.0 + length * i / (samples - 1);
    const double px = t * ux;
    const double py = t * uy;
    const double fx = std::floor(px);
    const double fy = std::floor(py);
    const double ax = px - fx;
    const double ay = py - fy;
    const int ix = static_cast<int>(fx);
    const int iy = static_cast<int>(fy);
    const double corner[4] = {(1 - ax) * (1 - ay), ax * (1 - ay), (1 - ax) * ay, ax * ay};
    const int ox[4] = {0, 1, 0, 1};
    const int oy[4] = {0, 0, 1, 1};
    for (int c = 0; c < 4; ++c) {
      const int kx = ix + ox[c];
      const int ky = iy + oy[c];
      if (corner[c] == 0.0 || kx < -r || kx > r || ky < -r || ky > r) continue;
      w[static_cast<std::size_t>((ky + r) * size + (kx + r))] += corner[c];
    }
  }
  return Kernel2D(size, std::move(w)).normalized();
}

Kernel2D box_kernel(int size) {
  if (size < 1 || size % 2 == 0) {
    throw ParameterError("box kernel size must be a positive odd integer");
  }
  return Kernel2D(size, std::vector<double>(static_cast<std::size_t>(size * size),
                                            1.0 / (static_cast<double>(size) * size)));
}

// ---------------------------------------------------------------------------

ImageBuffer convolve_unclamped(const ImageBuffer& img, const Kernel2D& k, Boundary boundary) {
  check_convolution_boundary(boundary);
  const int w = img.width();
  const int h = img.height();
  const int r = k.radius();
  const auto taps = sparse_taps(k);
  const auto cols = index_table(w, r, boundary);
  const auto rows = index_table(h, r, boundary);
  ImageBuffer out(w, h);
  std::vector<double> acc(static_cast<std::size_t>(w) * 3);
  for (int y = 0; y < h; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const Tap& t : taps) {
      const float* src = img.row(rows[static_cast<std::size_t>(y + t.dy + r)]);
      const int* cmap = cols.data() + (t.dx + r);
      for (int x = 0; x < w; ++x) {
        const float* p = src + 3 * cmap[x];
        acc[3 * static_cast<std::size_t>(x)] += t.w * p[0];
        acc[3 * static_cast<std::size_t>(x) + 1] += t.w * p[1];
        acc[3 * static_cast<std::size_t>(x) + 2] += t.w * p[2];
      }
    }
    float* dst = out.row(y);
    for (std::size_t i = 0; i < acc.size(); ++i) dst[i] = static_cast<float>(acc[i]);
  }
  return out;
}

ImageBuffer convolve2d(const ImageBuffer& img, const Kernel2D& k, Boundary boundary) {
  if (k.size() >= std::min(img.width(), img.height()) && k.size() > 1) {
    throw ParameterError("kernel size " + std::to_string(k.size()) +
                         " must be smaller than the image's shorter side");
  }
  ImageBuffer out = convolve_unclamped(img, k, boundary);
  out.clamp();
  return out;
}

Plane convolve(const Plane& p, const Kernel2D& k, Boundary boundary) {
  check_convolution_boundary(boundary);
  const int w = p.width();
  const int h = p.height();
  const int r = k.radius();
  const auto taps = sparse_taps(k);
  const auto cols = index_table(w, r, boundary);
  const auto rows = index_table(h, r, boundary);
  Plane out(w, h);
  std::vector<double> acc(static_cast<std::size_t>(w));
  for (int y = 0; y < h; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const Tap& t : taps) {
      const int sy = rows[static_cast<std::size_t>(y + t.dy + r)];
      const int* cmap = cols.data() + (t.dx + r);
      for (int x = 0; x < w; ++x) acc[static_cast<std::size_t>(x)] += t.w * p.at(cmap[x], sy);
    }
    for (int x = 0; x < w; ++x) out.at(x, y) = static_cast<float>(acc[static_cast<std::size_t>(x)]);
  }
  return out;
}

ImageBuffer gaussian_blur(const ImageBuffer& img, double sigma, Boundary boundary) {
  check_convolution_boundary(boundary);
  if (!(sigma > 0.0)) return img;
  const auto taps = gaussian_taps(sigma);
  const int r = static_cast<int>(taps.size() / 2);
  const int w = img.width();
  const int h = img.height();
  const auto cols = index_table(w, r, boundary);
  const auto rows = index_table(h, r, boundary);

  ImageBuffer tmp(w, h);
  for (int y = 0; y < h; ++y) {
    const float* src = img.row(y);
    float* dst = tmp.row(y);
    for (int x = 0; x < w; ++x) {
      double a0 = 0.0, a1 = 0.0, a2 = 0.0;
      for (int i = -r; i <= r; ++i) {
        const double t = taps[static_cast<std::size_t>(i + r)];
        const float* p = src + 3 * cols[static_cast<std::size_t>(x + i + r)];
        a0 += t * p[0];
        a1 += t * p[1];
        a2 += t * p[2];
      }
      dst[3 * x] = static_cast<float>(a0);
      dst[3 * x + 1] = static_cast<float>(a1);
      dst[3 * x + 2] = static_cast<float>(a2);
    }
  }
  ImageBuffer out(w, h);
  std::vector<double> acc(static_cast<std::size_t>(w) * 3);
  for (int y = 0; y < h; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int i = -r; i <= r; ++i) {
      const double t = taps[static_cast<std::size_t>(i + r)];
      const float* src = tmp.row(rows[static_cast<std::size_t>(y + i + r)]);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += t * src[k];
    }
    float* dst = out.row(y);
    for (std::size_t k = 0; k < acc.size(); ++k) dst[k] = static_cast<float>(acc[k]);
  }
  out.clamp();
  return out;
}

Plane gaussian_blur(const Plane& p, double sigma, Boundary boundary) {
  check_convolution_boundary(boundary);
  if (!(sigma > 0.0)) return p;
  const auto taps = gaussian_taps(sigma);
  const int r = static_cast<int>(taps.size() / 2);
  const int w = p.width();
  const int h = p.height();
  const auto cols = index_table(w, r, boundary);
  const auto rows = index_table(h, r, boundary);
  Plane tmp(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double a = 0.0;
      for (int i = -r; i <= r; ++i) {
        a += taps[static_cast<std::size_t>(i + r)] * p.at(cols[static_cast<std::size_t>(x + i + r)], y);
      }
      tmp.at(x, y) = static_cast<float>(a);
    }
  }
  Plane out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double a = 0.0;
      for (int i = -r; i <= r; ++i) {
        a += taps[static_cast<std::size_t>(i + r)] * tmp.at(x, rows[static_cast<std::size_t>(y + i + r)]);
      }
      out.at(x, y) = static_cast<float>(a);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ImageBuffer resample(const ImageBuffer& img, int w, int h, ResampleFilter filter) {
  if (w < 1 || h < 1) throw ParameterError("resample target dimensions must be >= 1");
  const int sw = img.width();
  const int sh = img.height();
  ImageBuffer out(w, h);
  switch (filter) {
    case ResampleFilter::nearest: {
      std::vector<int> xs(static_cast<std::size_t>(w));
      for (int x = 0; x < w; ++x) {
        xs[static_cast<std::size_t>(x)] =
            std::min(sw - 1, static_cast<int>(std::floor((x + 0.5) * sw / w)));
      }
      for (int y = 0; y < h; ++y) {
        const int sy = std::min(sh - 1, static_cast<int>(std::floor((y + 0.5) * sh / h)));
        const float* src = img.row(sy);
        float* dst = out.row(y);
        for (int x = 0; x < w; ++x) {
          const float* p = src + 3 * xs[static_cast<std::size_t>(x)];
          dst[3 * x] = p[0];
          dst[3 * x + 1] = p[1];
          dst[3 * x + 2] = p[2];
        }
      }
      return out;
    }
    case ResampleFilter::bilinear: {
      const double kx = static_cast<double>(sw) / w;
      const double ky = static_cast<double>(sh) / h;
      float px[3];
      for (int y = 0; y < h; ++y) {
        float* dst = out.row(y);
        const double sy = (y + 0.5) * ky - 0.5;
        for (int x = 0; x < w; ++x) {
          sample_bilinear(img, (x + 0.5) * kx - 0.5, sy, Boundary::clamp, px);
          dst[3 * x] = px[0];
          dst[3 * x + 1] = px[1];
          dst[3 * x + 2] = px[2];
        }
      }
      out.clamp();
      return out;
    }
    case ResampleFilter::box: {
      const auto bx = box_weights(sw, w);
      const auto by = box_weights(sh, h);
      ImageBuffer tmp(w, sh);
      for (int y = 0; y < sh; ++y) {
        const float* src = img.row(y);
        float* dst = tmp.row(y);
        for (int x = 0; x < w; ++x) {
          double a[3] = {0.0, 0.0, 0.0};
          const auto& wts = bx.weights[static_cast<std::size_t>(x)];
          const int first = bx.first[static_cast<std::size_t>(x)];
          for (std::size_t i = 0; i < wts.size(); ++i) {
            const float* p = src + 3 * (first + static_cast<int>(i));
            for (int c = 0; c < 3; ++c) a[c] += wts[i] * p[c];
          }
          for (int c = 0; c < 3; ++c) dst[3 * x + c] = static_cast<float>(a[c]);
        }
      }
      for (int y = 0; y < h; ++y) {
        const auto& wts = by.weights[static_cast<std::size_t>(y)];
        const int first = by.first[static_cast<std::size_t>(y)];
        float* dst = out.row(y);
        for (int x = 0; x < w * 3; ++x) {
          double a = 0.0;
          for (std::size_t i = 0; i < wts.size(); ++i) a += wts[i] * tmp.row(first + static_cast<int>(i))[x];
          dst[x] = static_cast<float>(a);
        }
      }
      out.clamp();
      return out;
    }
  }
  throw ParameterError("unknown resample filter");
}

ImageBuffer zoom_about_center(const ImageBuffer& img, double factor, Boundary fill) {
  if (!(factor > 0.0)) throw ParameterError("zoom factor must be positive");
  const double cx = (img.width() - 1) / 2.0;
  const double cy = (img.height() - 1) / 2.0;
  return warp(
      img,
      [=](double x, double y, double& sx, double& sy) {
        sx = cx + (x - cx) / factor;
        sy = cy + (y - cy) / factor;
      },
      fill);
}

Plane resample_bilinear(const Plane& p, int w, int h) {
  if (w < 1 || h < 1) throw ParameterError("resample target dimensions must be >= 1");
  Plane out(w, h);
  const double kx = static_cast<double>(p.width()) / w;
  const double ky = static_cast<double>(p.height()) / h;
  for (int y = 0; y < h; ++y) {
    const double sy = (y + 0.5) * ky - 0.5;
    const double fy = std::floor(sy);
    const auto wy = static_cast<float>(sy - fy);
    const int y0 = boundary_index(static_cast<int>(fy), p.height(), Boundary::clamp);
    const int y1 = boundary_index(static_cast<int>(fy) + 1, p.height(), Boundary::clamp);
    for (int x = 0; x < w; ++x) {
      const double sx = (x + 0.5) * kx - 0.5;
      const double fx = std::floor(sx);
      const auto wx = static_cast<float>(sx - fx);
      const int x0 = boundary_index(static_cast<int>(fx), p.width(), Boundary::clamp);
      const int x1 = boundary_index(static_cast<int>(fx) + 1, p.width(), Boundary::clamp);
      const float top = p.at(x0, y0) + wx * (p.at(x1, y0) - p.at(x0, y0));
      const float bot = p.at(x0, y1) + wx * (p.at(x1, y1) - p.at(x0, y1));
      out.at(x, y) = top + wy * (bot - top);
    }
  }
  return out;
}

}  // namespace cbench
