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

#include "cbench/corruptions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cbench/color.hpp"
#include "cbench/error.hpp"
#include "cbench/filter.hpp"
#include "cbench/image_io.hpp"

namespace cbench {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

float clamp01(double v) { return static_cast<float>(std::clamp(v, 0.0, 1.0)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// ---------------------------------------------------------------------------
// noise

ImageBuffer gaussian_noise(const ImageBuffer& img, double sigma, RandomStream& rs) {
  require(sigma >= 0.0, "gaussian_noise: sigma must be >= 0");
  ImageBuffer out = img;
  for (float& v : out.data()) v = clamp01(v + sigma * rs.normal());
  return out;
}

ImageBuffer shot_noise(const ImageBuffer& img, double lambda, RandomStream& rs) {
  require(lambda > 0.0, "shot_noise: photon scale must be > 0");
  ImageBuffer out = img;
  for (float& v : out.data()) v = clamp01(static_cast<double>(rs.poisson(v * lambda)) / lambda);
  return out;
}

ImageBuffer impulse_noise(const ImageBuffer& img, double p, RandomStream& rs) {
  require(p >= 0.0 && p <= 1.0, "impulse_noise: amount must lie in [0, 1]");
  ImageBuffer out = img;
  for (float& v : out.data()) {
    const double u = rs.uniform();
    if (u < p / 2) {
      v = 0.0f;
    } else if (u < p) {
      v = 1.0f;
    }
  }
  return out;
}

ImageBuffer speckle_noise(const ImageBuffer& img, double sigma, RandomStream& rs) {
  require(sigma >= 0.0, "speckle_noise: sigma must be >= 0");
  ImageBuffer out = img;
  for (float& v : out.data()) v = clamp01(v + v * sigma * rs.normal());
  return out;
}

// ---------------------------------------------------------------------------
// blur

ImageBuffer glass_blur(const ImageBuffer& img, const GlassBlur& p, RandomStream& rs) {
  require(p.sigma >= 0.0 && p.max_delta >= 0 && p.iterations >= 0, "glass_blur: negative parameter");
  ImageBuffer x = gaussian_blur(img, p.sigma);
  const int d = p.max_delta;
  const int w = x.width();
  const int h = x.height();
  for (int it = 0; it < p.iterations; ++it) {
    for (int y = h - d - 1; y >= d; --y) {
      for (int xx = w - d - 1; xx >= d; --xx) {
        const auto dx = static_cast<int>(rs.integer(-d, d));
        const auto dy = static_cast<int>(rs.integer(-d, d));
        for (int c = 0; c < 3; ++c) std::swap(x.at(xx, y, c), x.at(xx + dx, y + dy, c));
      }
    }
  }
  ImageBuffer out = gaussian_blur(x, p.sigma);
  out.clamp();
  return out;
}

ImageBuffer zoom_blur(const ImageBuffer& img, const std::vector<double>& factors) {
  require(!factors.empty(), "zoom_blur: empty zoom list");
  std::vector<double> acc(img.size(), 0.0);
  for (double z : factors) {
    require(z > 0.0, "zoom_blur: zoom factors must be positive");
    const ImageBuffer zoomed = zoom_about_center(img, z);
    const auto src = zoomed.data();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += src[i];
  }
  ImageBuffer out(img.width(), img.height());
  const double n = static_cast<double>(factors.size());
  auto dst = out.data();
  for (std::size_t i = 0; i < acc.size(); ++i) dst[i] = clamp01(acc[i] / n);
  return out;
}

// ---------------------------------------------------------------------------
// weather

ImageBuffer snow(const ImageBuffer& img, const Snow& p, RandomStream& rs) {
  require(p.flake_spread >= 0.0 && p.flake_zoom >= 1.0 && p.streak_length >= 0.0,
          "snow: invalid flake parameters");
  require(p.whiten >= 0.0 && p.whiten <= 1.0, "snow: whiten must lie in [0, 1]");
  const int w = img.width();
  const int h = img.height();
  const int lw = std::max(1, static_cast<int>(std::ceil(w / p.flake_zoom)));
  const int lh = std::max(1, static_cast<int>(std::ceil(h / p.flake_zoom)));
  Plane layer(lw, lh);
  for (float& v : layer.data()) v = static_cast<float>(rs.normal(p.flake_mean, p.flake_spread));
  layer = resample_bilinear(layer, w, h);
  for (float& v : layer.data()) v = v < p.threshold ? 0.0f : std::min(v, 1.0f);
  const double angle = rs.uniform(-135.0, -45.0);
  layer = convolve(layer, motion_kernel(p.streak_length, angle), Boundary::reflect);
  // a lone flake keeps its brightness along the streak
  const double gain = std::max(1.0, p.streak_length);
  for (float& v : layer.data()) v = std::min(1.0f, static_cast<float>(v * gain));

  ImageBuffer out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double lift = 1.5 * luma(img, x, y) + 0.5;
      const double flake = layer.at(x, y);
      for (int c = 0; c < 3; ++c) {
        const double v = img.at(x, y, c);
        const double white = (1.0 - p.whiten) * v + p.whiten * std::max(v, lift);
        out.at(x, y, c) = clamp01(std::max(white, flake));
      }
    }
  }
  return out;
}

ImageBuffer frost_from_texture(const ImageBuffer& img, const ImageBuffer& texture, RandomStream& rs) {
  const int w = img.width();
  const int h = img.height();
  ImageBuffer tex = texture;
  if (tex.width() < w || tex.height() < h) {
    const double s = std::max(static_cast<double>(w) / tex.width(), static_cast<double>(h) / tex.height());
    tex = resample(tex, std::max(w, static_cast<int>(std::ceil(tex.width() * s))),
                   std::max(h, static_cast<int>(std::ceil(tex.height() * s))), ResampleFilter::bilinear);
  }
  const auto x0 = static_cast<int>(rs.integer(0, tex.width() - w));
  const auto y0 = static_cast<int>(rs.integer(0, tex.height() - h));
  const bool flip_x = rs.uniform() < 0.5;
  const bool flip_y = rs.uniform() < 0.5;
  ImageBuffer out(w, h);
  for (int y = 0; y < h; ++y) {
    const int sy = y0 + (flip_y ? h - 1 - y : y);
    for (int x = 0; x < w; ++x) {
      const int sx = x0 + (flip_x ? w - 1 - x : x);
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = tex.at(sx, sy, c);
    }
  }
  return out;
}

ImageBuffer frost(const ImageBuffer& img, const Frost& p, RandomStream& rs) {
  require(p.image_weight >= 0.0 && p.frost_weight >= 0.0, "frost: negative weight");
  const int w = img.width();
  const int h = img.height();
  ImageBuffer layer;
  if (p.textures.empty()) {
    RandomStream tex_rs = rs.child("procedural");
    const Plane t = procedural_frost(w, h, tex_rs);
    layer = ImageBuffer(w, h);
    static constexpr double kTint[3] = {0.85, 0.93, 1.0};
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        for (int c = 0; c < 3; ++c) layer.at(x, y, c) = static_cast<float>(t.at(x, y) * kTint[c]);
      }
    }
  } else {
    const auto idx = rs.below(p.textures.size());
    layer = frost_from_texture(img, p.textures[idx], rs);
  }
  ImageBuffer out(w, h);
  const auto src = img.data();
  const auto fr = layer.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = clamp01(p.image_weight * src[i] + p.frost_weight * fr[i]);
  return out;
}

ImageBuffer fog(const ImageBuffer& img, const Fog& p, RandomStream& rs) {
  require(p.weight >= 0.0 && p.weight <= 1.0, "fog: weight must lie in [0, 1]");
  require(p.floor >= 0.0 && p.floor <= 1.0, "fog: floor must lie in [0, 1]");
  const int w = img.width();
  const int h = img.height();
  const int n = diamond_square_side(std::max(w, h));
  const Plane plasma = diamond_square(n, p.roughness, rs);
  const int x0 = (n - w) / 2;
  const int y0 = (n - h) / 2;
  double max_luma = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) max_luma = std::max(max_luma, static_cast<double>(luma(img, x, y)));
  }
  ImageBuffer out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double f = max_luma * (p.floor + (1.0 - p.floor) * plasma.at(x0 + x, y0 + y));
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = clamp01((1.0 - p.weight) * img.at(x, y, c) + p.weight * f);
    }
  }
  return out;
}

ImageBuffer brightness(const ImageBuffer& img, double delta) {
  ImageBuffer hsv = rgb_to_hsv(img);
  auto d = hsv.data();
  for (std::size_t i = 2; i < d.size(); i += 3) d[i] = clamp01(d[i] + delta);
  return hsv_to_rgb(hsv);
}

ImageBuffer spatter(const ImageBuffer& img, const Spatter& p, RandomStream& rs) {
  require(p.smoothing >= 0.0, "spatter: smoothing must be >= 0");
  require(p.opacity >= 0.0 && p.opacity <= 1.0, "spatter: opacity must lie in [0, 1]");
  const int w = img.width();
  const int h = img.height();
  Plane field(w, h);
  for (float& v : field.data()) v = static_cast<float>(rs.normal());
  field = gaussian_blur(field, p.smoothing);
  double sum = 0.0;
  double sq = 0.0;
  for (float v : field.data()) {
    sum += v;
    sq += static_cast<double>(v) * v;
  }
  const double n = static_cast<double>(field.size());
  const double mean = sum / n;
  const double sd = std::sqrt(std::max(sq / n - mean * mean, 1e-30));
  constexpr double kEdge = 0.4;

  ImageBuffer out(w, h);
  if (p.mud) {
    static constexpr double kMud[3] = {0.25, 0.16, 0.08};
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double z = (field.at(x, y) - mean) / sd;
        const double m = p.opacity * std::clamp((z - p.threshold) / kEdge, 0.0, 1.0);
        const double shade = 0.8 + 0.2 * std::clamp(z - p.threshold, 0.0, 1.0);
        for (int c = 0; c < 3; ++c) out.at(x, y, c) = clamp01((1.0 - m) * img.at(x, y, c) + m * kMud[c] * shade);
      }
    }
    return out;
  }
  static constexpr double kWater[3] = {0.69, 0.93, 0.93};
  const ImageBuffer soft = gaussian_blur(img, 2.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double z = (field.at(x, y) - mean) / sd;
      const double m = p.opacity * std::clamp((z - p.threshold) / kEdge, 0.0, 1.0);
      // rim highlight where the drop edge is steepest
      const double rim = std::clamp(1.0 - std::abs(z - p.threshold - kEdge / 2) / (kEdge / 2), 0.0, 1.0);
      for (int c = 0; c < 3; ++c) {
        const double target = 0.5 * soft.at(x, y, c) + 0.5 * kWater[c] + 0.3 * rim;
        out.at(x, y, c) = clamp01((1.0 - m) * img.at(x, y, c) + m * target);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// digital

ImageBuffer contrast(const ImageBuffer& img, double factor) {
  require(factor >= 0.0, "contrast: factor must be >= 0");
  double mean[3] = {0, 0, 0};
  const auto src = img.data();
  for (std::size_t i = 0; i < src.size(); ++i) mean[i % 3] += src[i];
  for (double& m : mean) m /= static_cast<double>(img.pixel_count());
  ImageBuffer out(img.width(), img.height());
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double m = mean[i % 3];
    dst[i] = clamp01(m + factor * (static_cast<double>(src[i]) - m));
  }
  return out;
}

Plane unit_rms_field(int w, int h, double sigma, RandomStream& rs) {
  Plane f(w, h);
  for (float& v : f.data()) v = static_cast<float>(rs.uniform(-1.0, 1.0));
  f = gaussian_blur(f, sigma);
  double sq = 0.0;
  for (float v : f.data()) sq += static_cast<double>(v) * v;
  const double rms = std::sqrt(sq / static_cast<double>(f.size()));
  if (rms > 0.0) {
    for (float& v : f.data()) v = static_cast<float>(v / rms);
  }
  return f;
}

ImageBuffer elastic(const ImageBuffer& img, const Elastic& p, RandomStream& rs) {
  require(p.alpha >= 0.0 && p.sigma >= 0.0, "elastic: negative parameter");
  const Plane dx = unit_rms_field(img.width(), img.height(), p.sigma, rs);
  const Plane dy = unit_rms_field(img.width(), img.height(), p.sigma, rs);
  const double a = p.alpha;
  return warp(img, [&](double x, double y, double& sx, double& sy) {
    const int ix = static_cast<int>(x);
    const int iy = static_cast<int>(y);
    sx = x + a * dx.at(ix, iy);
    sy = y + a * dy.at(ix, iy);
  });
}

ImageBuffer pixelate(const ImageBuffer& img, double d) {
  require(d >= 1.0, "pixelate: factor must be >= 1");
  const int w = std::max(1, static_cast<int>(std::lround(img.width() / d)));
  const int h = std::max(1, static_cast<int>(std::lround(img.height() / d)));
  if (w == img.width() && h == img.height()) return img;
  return resample(resample(img, w, h, ResampleFilter::box), img.width(), img.height(), ResampleFilter::nearest);
}

ImageBuffer saturate(const ImageBuffer& img, const Saturate& p) {
  ImageBuffer hsv = rgb_to_hsv(img);
  auto d = hsv.data();
  for (std::size_t i = 1; i < d.size(); i += 3) d[i] = clamp01(d[i] * p.scale + p.shift);
  return hsv_to_rgb(hsv);
}

// ---------------------------------------------------------------------------
// schedule lookup

struct ParamView {
  const SeveritySchedule& s;
  CorruptionKind kind;
  int severity;
  double operator()(std::string_view name) const { return s.param(kind, name, severity); }
};

const ImageBuffer& cached_texture(const std::string& path) {
  static std::mutex mu;
  static std::map<std::string, ImageBuffer> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it == cache.end()) it = cache.emplace(path, load_image(path)).first;
  return it->second;
}

}  // namespace

std::uint64_t derive_corruption_seed(std::uint64_t root_seed, const std::string& item_id,
                                     CorruptionKind kind, int severity) {
  return RandomStream::derive(root_seed, {item_id, std::string(name(kind)), std::int64_t{severity}});
}

ImageBuffer corrupt_noise(const ImageBuffer& img, const NoiseParams& params, RandomStream& stream) {
  return std::visit(overloaded{
      [&](const GaussianNoise& p) { return gaussian_noise(img, p.sigma, stream); },
      [&](const ShotNoise& p) { return shot_noise(img, p.photons, stream); },
      [&](const ImpulseNoise& p) { return impulse_noise(img, p.amount, stream); },
      [&](const SpeckleNoise& p) { return speckle_noise(img, p.sigma, stream); },
  }, params);
}

std::vector<double> zoom_factors(double max_zoom, double step) {
  require(max_zoom >= 1.0, "zoom_blur: max zoom must be >= 1");
  require(step > 0.0, "zoom_blur: zoom step must be > 0");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double z = 1.0 + i * step;
    if (z > max_zoom + 1e-9) break;
    out.push_back(z);
  }
  return out;
}

ImageBuffer motion_blur(const ImageBuffer& img, double length, double angle_deg) {
  require(length >= 0.0, "motion_blur: length must be >= 0");
  ImageBuffer out = convolve_unclamped(img, motion_kernel(length, angle_deg), Boundary::reflect);
  out.clamp();
  return out;
}

ImageBuffer corrupt_blur(const ImageBuffer& img, const BlurParams& params, RandomStream& stream) {
  return std::visit(overloaded{
      [&](const DefocusBlur& p) {
        require(p.radius >= 0.0, "defocus_blur: radius must be >= 0");
        ImageBuffer out = convolve_unclamped(img, disk_kernel(p.radius), Boundary::reflect);
        out.clamp();
        return out;
      },
      [&](const GlassBlur& p) { return glass_blur(img, p, stream); },
      [&](const MotionBlur& p) { return motion_blur(img, p.length, stream.uniform(-45.0, 45.0)); },
      [&](const ZoomBlur& p) { return zoom_blur(img, p.factors); },
      [&](const GaussianBlur& p) {
        require(p.sigma >= 0.0, "gaussian_blur: sigma must be >= 0");
        ImageBuffer out = gaussian_blur(img, p.sigma);
        out.clamp();
        return out;
      },
  }, params);
}

ImageBuffer corrupt_weather(const ImageBuffer& img, const WeatherParams& params, RandomStream& stream) {
  return std::visit(overloaded{
      [&](const Snow& p) { return snow(img, p, stream); },
      [&](const Frost& p) { return frost(img, p, stream); },
      [&](const Fog& p) { return fog(img, p, stream); },
      [&](const Brightness& p) { return brightness(img, p.delta); },
      [&](const Spatter& p) { return spatter(img, p, stream); },
  }, params);
}

ImageBuffer corrupt_digital(const ImageBuffer& img, const DigitalParams& params, RandomStream& stream) {
  return std::visit(overloaded{
      [&](const Contrast& p) { return contrast(img, p.factor); },
      [&](const Elastic& p) { return elastic(img, p, stream); },
      [&](const Pixelate& p) { return pixelate(img, p.factor); },
      [&](const Jpeg& p) {
        require(p.quality >= 1 && p.quality <= 100, "jpeg: quality must lie in [1, 100]");
        return jpeg_roundtrip(img, p.quality);
      },
      [&](const Saturate& p) { return saturate(img, p); },
  }, params);
}

Plane procedural_frost(int width, int height, RandomStream& stream) {
  const int tw = width + width / 4;
  const int th = height + height / 4;
  RandomStream base_rs = stream.child("base");
  const Plane base = diamond_square(diamond_square_side(std::max(tw, th)), 0.6, base_rs);

  // crystals: sparse seeds streaked along three random directions
  RandomStream crys_rs = stream.child("crystals");
  Plane seeds(tw, th);
  for (float& v : seeds.data()) v = crys_rs.uniform() < 0.012 ? 1.0f : 0.0f;
  Plane crystal(tw, th, 0.0f);
  constexpr double kLength = 11.0;
  for (int k = 0; k < 3; ++k) {
    const Plane streak = convolve(seeds, motion_kernel(kLength, crys_rs.uniform(0.0, 180.0)), Boundary::reflect);
    auto dst = crystal.data();
    const auto src = streak.data();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = std::max(dst[i], static_cast<float>(src[i] * kLength));
  }
  crystal = gaussian_blur(crystal, 0.7);

  const auto x0 = static_cast<int>(stream.integer(0, tw - width));
  const auto y0 = static_cast<int>(stream.integer(0, th - height));
  const bool flip_x = stream.uniform() < 0.5;
  const bool flip_y = stream.uniform() < 0.5;
  Plane out(width, height);
  for (int y = 0; y < height; ++y) {
    const int sy = y0 + (flip_y ? height - 1 - y : y);
    for (int x = 0; x < width; ++x) {
      const int sx = x0 + (flip_x ? width - 1 - x : x);
      const double v = 0.25 + 0.55 * base.at(sx, sy) + 0.6 * std::min(crystal.at(sx, sy), 1.0f);
      out.at(x, y) = clamp01(v);
    }
  }
  return out;
}

ImageBuffer apply_corruption(const ImageBuffer& img, const CorruptionSpec& spec,
                             const SeveritySchedule& schedule) {
  require_benchmark_size(img);
  require(spec.severity >= 1 && spec.severity <= kSeverityLevels,
          "severity " + std::to_string(spec.severity) + " outside 1..5");
  if (!schedule.covers(spec.kind)) {
    throw ParameterError("schedule does not cover '" + std::string(name(spec.kind)) + "'");
  }
  const ParamView p{schedule, spec.kind, spec.severity};
  RandomStream rs(spec.seed, {std::string(name(spec.kind))});
  switch (spec.kind) {
    case CorruptionKind::gaussian_noise: return corrupt_noise(img, GaussianNoise{p("sigma")}, rs);
    case CorruptionKind::shot_noise: return corrupt_noise(img, ShotNoise{p("photons")}, rs);
    case CorruptionKind::impulse_noise: return corrupt_noise(img, ImpulseNoise{p("amount")}, rs);
    case CorruptionKind::speckle_noise: return corrupt_noise(img, SpeckleNoise{p("sigma")}, rs);
    case CorruptionKind::defocus_blur: return corrupt_blur(img, DefocusBlur{p("radius")}, rs);
    case CorruptionKind::glass_blur:
      return corrupt_blur(img, GlassBlur{p("sigma"), static_cast<int>(std::lround(p("max_delta"))),
                                         static_cast<int>(std::lround(p("iterations")))}, rs);
    case CorruptionKind::motion_blur: return corrupt_blur(img, MotionBlur{p("length")}, rs);
    case CorruptionKind::zoom_blur:
      return corrupt_blur(img, ZoomBlur{zoom_factors(p("max_zoom"), p("zoom_step"))}, rs);
    case CorruptionKind::gaussian_blur: return corrupt_blur(img, GaussianBlur{p("sigma")}, rs);
    case CorruptionKind::snow:
      return corrupt_weather(img, Snow{p("flake_mean"), p("flake_spread"), p("flake_zoom"), p("threshold"),
                                       p("streak_length"), p("whiten")}, rs);
    case CorruptionKind::frost: {
      std::vector<ImageBuffer> textures;
      for (const auto& path : schedule.frost_textures()) textures.push_back(cached_texture(path));
      return corrupt_weather(img, Frost{p("image_weight"), p("frost_weight"), textures}, rs);
    }
    case CorruptionKind::fog: return corrupt_weather(img, Fog{p("weight"), p("roughness"), p("floor")}, rs);
    case CorruptionKind::brightness: return corrupt_weather(img, Brightness{p("delta")}, rs);
    case CorruptionKind::spatter:
      return corrupt_weather(img, Spatter{p("threshold"), p("smoothing"), p("opacity"), p("mud") >= 0.5}, rs);
    case CorruptionKind::contrast: return corrupt_digital(img, Contrast{p("factor")}, rs);
    case CorruptionKind::elastic: return corrupt_digital(img, Elastic{p("alpha"), p("sigma")}, rs);
    case CorruptionKind::pixelate: return corrupt_digital(img, Pixelate{p("factor")}, rs);
    case CorruptionKind::jpeg:
      return corrupt_digital(img, Jpeg{static_cast<int>(std::lround(p("quality")))}, rs);
    case CorruptionKind::saturate: return corrupt_digital(img, Saturate{p("scale"), p("shift")}, rs);
  }
  throw ParameterError("unknown corruption kind");
}

}  // namespace cbench
