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

#include "cbench/schedule.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cbench/error.hpp"
#include "cbench/hash.hpp"
#include "cbench/numeric_text.hpp"

namespace cbench {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Trend inc = Trend::increasing;
constexpr Trend dec = Trend::decreasing;
constexpr Trend fix = Trend::fixed;

constexpr ParamDescriptor kGaussianNoise[] = {{"sigma", inc, 0, kInf, "noise std"}};
constexpr ParamDescriptor kShotNoise[] = {{"photons", dec, 1e-6, kInf, "photon count scale lambda"}};
constexpr ParamDescriptor kImpulseNoise[] = {{"amount", inc, 0, 1, "replacement probability"}};
constexpr ParamDescriptor kDefocus[] = {{"radius", inc, 0, 64, "disk radius, px"}};
constexpr ParamDescriptor kGlass[] = {
    {"sigma", inc, 0, 16, "pre/post blur sigma, px"},
    {"max_delta", inc, 0, 16, "max swap displacement, px"},
    {"iterations", inc, 0, 16, "swap rounds"}};
constexpr ParamDescriptor kMotion[] = {{"length", inc, 0, 128, "streak length, px"}};
constexpr ParamDescriptor kZoom[] = {
    {"max_zoom", inc, 1, 4, "largest zoom factor"},
    {"zoom_step", fix, 1e-4, 1, "spacing of zoom factors"}};
constexpr ParamDescriptor kSnow[] = {
    {"flake_mean", inc, -kInf, kInf, "mean of flake noise"},
    {"flake_spread", inc, 0, kInf, "std of flake noise"},
    {"flake_zoom", inc, 1, 16, "flake layer upscaling"},
    {"threshold", dec, -kInf, kInf, "flake cut-off"},
    {"streak_length", inc, 0, 128, "streak blur length, px"},
    {"whiten", inc, 0, 1, "whitening blend weight"}};
constexpr ParamDescriptor kFrost[] = {
    {"image_weight", dec, 0, 1, "weight of the image"},
    {"frost_weight", inc, 0, 1, "weight of the frost layer"}};
constexpr ParamDescriptor kFog[] = {
    {"weight", inc, 0, 1, "fog blend weight w"},
    {"roughness", inc, 1e-6, 1, "plasma amplitude decay"},
    {"floor", fix, 0, 1, "fog brightness floor"}};
constexpr ParamDescriptor kBrightness[] = {{"delta", inc, -1, 1, "added to V"}};
constexpr ParamDescriptor kContrast[] = {{"factor", dec, 0, kInf, "contrast factor c"}};
constexpr ParamDescriptor kElastic[] = {
    {"alpha", inc, 0, 64, "rms displacement, px"},
    {"sigma", fix, 0, 64, "field smoothing, px"}};
constexpr ParamDescriptor kPixelate[] = {{"factor", inc, 1, 64, "downscale factor"}};
constexpr ParamDescriptor kJpeg[] = {{"quality", dec, 1, 100, "encoder quality"}};
constexpr ParamDescriptor kSpeckle[] = {{"sigma", inc, 0, kInf, "multiplicative noise std"}};
constexpr ParamDescriptor kGaussianBlur[] = {{"sigma", inc, 0, 64, "blur sigma, px"}};
constexpr ParamDescriptor kSpatter[] = {
    {"threshold", dec, -kInf, kInf, "z-score cut"},
    {"smoothing", fix, 0, 64, "field smoothing, px"},
    {"opacity", inc, 0, 1, "blob opacity"},
    {"mud", inc, 0, 1, "0 water, 1 mud"}};
constexpr ParamDescriptor kSaturate[] = {
    {"scale", inc, 0, kInf, "S multiplier"},
    {"shift", inc, -1, 1, "added to S"}};

constexpr ParamDescriptor kPNoise[] = {{"sigma", fix, 0, kInf, "noise std"}};
constexpr ParamDescriptor kPShot[] = {{"photons", fix, 1e-6, kInf, "photon count scale"}};
constexpr ParamDescriptor kPMotion[] = {
    {"length_start", fix, 0, 64, "first streak length, px"},
    {"length_growth", fix, 0, 8, "added per frame, px"}};
constexpr ParamDescriptor kPZoom[] = {
    {"zoom_start", fix, 0, 1, "first extra zoom"},
    {"zoom_growth", fix, 0, 1, "added per frame"}};
constexpr ParamDescriptor kPGaussianBlur[] = {
    {"sigma_start", fix, 0, 16, "first sigma, px"},
    {"sigma_growth", fix, 0, 4, "added per frame, px"}};
constexpr ParamDescriptor kPSnow[] = {
    {"flake_mean", fix, -kInf, kInf, ""},
    {"flake_spread", fix, 0, kInf, ""},
    {"flake_zoom", fix, 1, 16, ""},
    {"threshold", fix, -kInf, kInf, ""},
    {"streak_length", fix, 0, 128, ""}};
constexpr ParamDescriptor kPSpatter[] = {
    {"threshold", fix, -kInf, kInf, ""},
    {"smoothing", fix, 0, 64, ""},
    {"opacity", fix, 0, 1, ""}};
constexpr ParamDescriptor kPBrightness[] = {{"step", fix, -1, 1, "V increment per frame"}};
constexpr ParamDescriptor kPTranslate[] = {{"step_pixels", fix, 0, 64, "shift per frame, px"}};
constexpr ParamDescriptor kPRotate[] = {{"step_degrees", fix, -45, 45, "rotation per frame"}};
constexpr ParamDescriptor kPTilt[] = {{"max_step_degrees", fix, 0, 10, "bound on per-frame tilt"}};
constexpr ParamDescriptor kPScale[] = {{"step_factor", fix, 0.5, 2, "zoom per frame"}};
constexpr ParamDescriptor kPShear[] = {{"step", fix, -1, 1, "shear per frame"}};

using Row = std::array<double, kSeverityLevels>;

struct DefaultEntry {
  CorruptionKind kind;
  std::string_view param;
  Row values;
};

// Calibrated with tools/calibrate_schedule on the synthetic corpus.
const DefaultEntry kDefaults[] = {
    {CorruptionKind::gaussian_noise, "sigma", {0.0115, 0.0237, 0.0358, 0.0506, 0.0704}},
    {CorruptionKind::shot_noise, "photons", {2900, 660, 280, 140, 72}},
    {CorruptionKind::impulse_noise, "amount", {0.0022, 0.0082, 0.0154, 0.0251, 0.0383}},
    {CorruptionKind::defocus_blur, "radius", {2.5, 4, 5.5, 7.3, 10.8}},
    {CorruptionKind::glass_blur, "sigma", {0.6, 0.7, 0.75, 0.8, 0.9}},
    {CorruptionKind::glass_blur, "max_delta", {1, 1, 1, 2, 2}},
    {CorruptionKind::glass_blur, "iterations", {1, 2, 3, 3, 4}},
    {CorruptionKind::motion_blur, "length", {5.4, 9.7, 14.1, 20.7, 37.9}},
    {CorruptionKind::zoom_blur, "max_zoom", {1.03, 1.05, 1.08, 1.13, 1.24}},
    {CorruptionKind::zoom_blur, "zoom_step", {0.01, 0.01, 0.01, 0.01, 0.01}},
    {CorruptionKind::snow, "flake_mean", {0.1, 0.13, 0.16, 0.2, 0.22}},
    {CorruptionKind::snow, "flake_spread", {0.3, 0.3, 0.3, 0.3, 0.3}},
    {CorruptionKind::snow, "flake_zoom", {2, 2.5, 2.5, 3, 3}},
    {CorruptionKind::snow, "threshold", {0.65, 0.62, 0.58, 0.56, 0.55}},
    {CorruptionKind::snow, "streak_length", {5, 6, 7, 8, 9}},
    {CorruptionKind::snow, "whiten", {0.06, 0.09, 0.12, 0.15, 0.18}},
    {CorruptionKind::frost, "image_weight", {1, 0.9, 0.8, 0.75, 0.7}},
    {CorruptionKind::frost, "frost_weight", {0.1, 0.25, 0.38, 0.5, 0.62}},
    {CorruptionKind::fog, "weight", {0.17, 0.38, 0.52, 0.65, 0.75}},
    {CorruptionKind::fog, "roughness", {0.5, 0.55, 0.6, 0.65, 0.7}},
    {CorruptionKind::fog, "floor", {0.5, 0.5, 0.5, 0.5, 0.5}},
    {CorruptionKind::brightness, "delta", {0.12, 0.26, 0.37, 0.48, 0.6}},
    {CorruptionKind::contrast, "factor", {0.73, 0.51, 0.36, 0.25, 0.15}},
    {CorruptionKind::elastic, "alpha", {0.61, 1.27, 1.95, 2.76, 3.97}},
    {CorruptionKind::elastic, "sigma", {6, 6, 6, 6, 6}},
    {CorruptionKind::pixelate, "factor", {1.68, 3.18, 4.53, 6.14, 8.78}},
    {CorruptionKind::jpeg, "quality", {85, 18, 7, 4, 1}},
    {CorruptionKind::speckle_noise, "sigma", {0.0265, 0.059, 0.094, 0.138, 0.196}},
    {CorruptionKind::gaussian_blur, "sigma", {1.37, 2.34, 3.35, 4.82, 8.17}},
    {CorruptionKind::spatter, "threshold", {1.4, 0.9, 0.5, 0.4, 0}},
    {CorruptionKind::spatter, "smoothing", {3, 3, 3, 3, 3}},
    {CorruptionKind::spatter, "opacity", {0.5, 0.6, 0.7, 0.75, 0.85}},
    {CorruptionKind::spatter, "mud", {0, 0, 0, 1, 1}},
    {CorruptionKind::saturate, "scale", {1.3, 1.6, 2, 2.9, 5}},
    {CorruptionKind::saturate, "shift", {0, 0, 0.05, 0.1, 0.2}},
};

struct PerturbationDefault {
  PerturbationKind kind;
  std::string_view param;
  double value;
};

const PerturbationDefault kPerturbationDefaults[] = {
    {PerturbationKind::gaussian_noise, "sigma", 0.02},
    {PerturbationKind::shot_noise, "photons", 100},
    {PerturbationKind::speckle_noise, "sigma", 0.05},
    {PerturbationKind::motion_blur, "length_start", 1.2},
    {PerturbationKind::motion_blur, "length_growth", 0.02},
    {PerturbationKind::zoom_blur, "zoom_start", 0.01},
    {PerturbationKind::zoom_blur, "zoom_growth", 0.0005},
    {PerturbationKind::gaussian_blur, "sigma_start", 0.3},
    {PerturbationKind::gaussian_blur, "sigma_growth", 0.01},
    {PerturbationKind::snow, "flake_mean", 0.1},
    {PerturbationKind::snow, "flake_spread", 0.25},
    {PerturbationKind::snow, "flake_zoom", 2},
    {PerturbationKind::snow, "threshold", 0.85},
    {PerturbationKind::snow, "streak_length", 5},
    {PerturbationKind::spatter, "threshold", 2.5},
    {PerturbationKind::spatter, "smoothing", 2},
    {PerturbationKind::spatter, "opacity", 0.3},
    {PerturbationKind::brightness, "step", 0.01},
    {PerturbationKind::translate, "step_pixels", 1},
    {PerturbationKind::rotate, "step_degrees", 0.5},
    {PerturbationKind::tilt, "max_step_degrees", 0.3},
    {PerturbationKind::scale, "step_factor", 1.01},
    {PerturbationKind::shear, "step", 0.005},
};

constexpr std::string_view kPerturbationPrefix = "perturbation.";

const ParamDescriptor* find_descriptor(std::span<const ParamDescriptor> params, std::string_view name) {
  for (const auto& p : params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void check_bounds(const ParamDescriptor& d, double v, const std::string& where) {
  if (v < d.lo || v > d.hi) {
    throw ParameterError(where + ": value " + format_double(v) + " outside [" + format_double(d.lo) +
                         ", " + format_double(d.hi) + "]");
  }
}

}  // namespace

std::span<const ParamDescriptor> corruption_params(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::gaussian_noise: return kGaussianNoise;
    case CorruptionKind::shot_noise: return kShotNoise;
    case CorruptionKind::impulse_noise: return kImpulseNoise;
    case CorruptionKind::defocus_blur: return kDefocus;
    case CorruptionKind::glass_blur: return kGlass;
    case CorruptionKind::motion_blur: return kMotion;
    case CorruptionKind::zoom_blur: return kZoom;
    case CorruptionKind::snow: return kSnow;
    case CorruptionKind::frost: return kFrost;
    case CorruptionKind::fog: return kFog;
    case CorruptionKind::brightness: return kBrightness;
    case CorruptionKind::contrast: return kContrast;
    case CorruptionKind::elastic: return kElastic;
    case CorruptionKind::pixelate: return kPixelate;
    case CorruptionKind::jpeg: return kJpeg;
    case CorruptionKind::speckle_noise: return kSpeckle;
    case CorruptionKind::gaussian_blur: return kGaussianBlur;
    case CorruptionKind::spatter: return kSpatter;
    case CorruptionKind::saturate: return kSaturate;
  }
  throw ParameterError("unknown corruption kind");
}

std::span<const ParamDescriptor> perturbation_params(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::gaussian_noise: return kPNoise;
    case PerturbationKind::shot_noise: return kPShot;
    case PerturbationKind::speckle_noise: return kPNoise;
    case PerturbationKind::motion_blur: return kPMotion;
    case PerturbationKind::zoom_blur: return kPZoom;
    case PerturbationKind::gaussian_blur: return kPGaussianBlur;
    case PerturbationKind::snow: return kPSnow;
    case PerturbationKind::spatter: return kPSpatter;
    case PerturbationKind::brightness: return kPBrightness;
    case PerturbationKind::translate: return kPTranslate;
    case PerturbationKind::rotate: return kPRotate;
    case PerturbationKind::tilt: return kPTilt;
    case PerturbationKind::scale: return kPScale;
    case PerturbationKind::shear: return kPShear;
  }
  throw ParameterError("unknown perturbation kind");
}

SeveritySchedule SeveritySchedule::defaults() {
  static const SeveritySchedule built = [] {
    SeveritySchedule s;
    for (const auto& e : kDefaults) s.corruption_[e.kind][std::string(e.param)] = e.values;
    for (const auto& e : kPerturbationDefaults) s.perturbation_[e.kind][std::string(e.param)] = e.value;
    return s;
  }();
  return built;
}

SeveritySchedule SeveritySchedule::parse(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParameterError("schedule: line " + std::to_string(e.line()) + ": " + e.message());
  }

  SeveritySchedule out = defaults();
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      throw ParameterError("schedule: key '" + section + "' outside any section");
    }
    if (section.starts_with(kPerturbationPrefix)) {
      const auto kname = std::string_view(section).substr(kPerturbationPrefix.size());
      const auto kind = find_perturbation_kind(kname);
      if (!kind) throw ParameterError("schedule: unknown section [" + section + "]");
      const auto params = perturbation_params(*kind);
      std::map<std::string, double, std::less<>> values;
      for (const auto& [key, node] : body) {
        const std::string where = "schedule [" + section + "] " + key;
        const ParamDescriptor* d = find_descriptor(params, key);
        if (d == nullptr) throw ParameterError(where + ": unknown parameter");
        const double v = parse_double(node.data(), where);
        check_bounds(*d, v, where);
        values[key] = v;
      }
      for (const auto& d : params) {
        if (!values.contains(d.name)) {
          throw ParameterError("schedule [" + section + "]: missing parameter '" + std::string(d.name) + "'");
        }
      }
      out.perturbation_[*kind] = std::move(values);
      continue;
    }

    const auto kind = find_corruption_kind(section);
    if (!kind) throw ParameterError("schedule: unknown section [" + section + "]");
    const auto params = corruption_params(*kind);
    std::map<std::string, Series, std::less<>> values;
    for (const auto& [key, node] : body) {
      const std::string where = "schedule [" + section + "] " + key;
      if (*kind == CorruptionKind::frost && key == "textures") {
        std::vector<std::string> paths;
        std::string item;
        std::istringstream list(node.data());
        while (std::getline(list, item, ';')) {
          const auto b = item.find_first_not_of(" \t");
          if (b == std::string::npos) continue;
          const auto e = item.find_last_not_of(" \t");
          paths.push_back(item.substr(b, e - b + 1));
        }
        out.frost_textures_ = std::move(paths);
        continue;
      }
      const ParamDescriptor* d = find_descriptor(params, key);
      if (d == nullptr) throw ParameterError(where + ": unknown parameter");
      std::istringstream tokens(node.data());
      std::string tok;
      Series series{};
      int n = 0;
      while (tokens >> tok) {
        if (n == kSeverityLevels) throw ParameterError(where + ": more than 5 values");
        series[static_cast<std::size_t>(n)] = parse_double(tok, where);
        check_bounds(*d, series[static_cast<std::size_t>(n)], where);
        ++n;
      }
      if (n != kSeverityLevels) {
        throw ParameterError(where + ": expected 5 values, got " + std::to_string(n));
      }
      values[key] = series;
    }
    for (const auto& d : params) {
      if (!values.contains(d.name)) {
        throw ParameterError("schedule [" + section + "]: missing parameter '" + std::string(d.name) + "'");
      }
    }
    out.corruption_[*kind] = std::move(values);
  }
  out.validate();
  return out;
}

SeveritySchedule SeveritySchedule::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read schedule " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  SeveritySchedule s = parse(buf.str());
  // texture paths are relative to the schedule file
  for (auto& t : s.frost_textures_) {
    if (std::filesystem::path(t).is_relative()) t = (path.parent_path() / t).string();
  }
  return s;
}

std::string SeveritySchedule::serialize() const {
  std::ostringstream out;
  for (auto kind : all_corruption_kinds()) {
    const auto it = corruption_.find(kind);
    if (it == corruption_.end()) continue;
    out << '[' << name(kind) << "]\n";
    for (const auto& d : corruption_params(kind)) {
      const auto p = it->second.find(d.name);
      if (p == it->second.end()) continue;
      out << d.name << " =";
      for (double v : p->second) out << ' ' << format_double(v);
      out << '\n';
    }
    if (kind == CorruptionKind::frost && !frost_textures_.empty()) {
      out << "textures = ";
      for (std::size_t i = 0; i < frost_textures_.size(); ++i) {
        out << (i ? ";" : "") << frost_textures_[i];
      }
      out << '\n';
    }
    out << '\n';
  }
  for (auto kind : all_perturbation_kinds()) {
    const auto it = perturbation_.find(kind);
    if (it == perturbation_.end()) continue;
    out << '[' << kPerturbationPrefix << name(kind) << "]\n";
    for (const auto& d : perturbation_params(kind)) {
      const auto p = it->second.find(d.name);
      if (p == it->second.end()) continue;
      out << d.name << " = " << format_double(p->second) << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string SeveritySchedule::hash() const { return sha256_hex(serialize()); }

const SeveritySchedule::Series& SeveritySchedule::series(CorruptionKind kind, std::string_view p) const {
  const auto it = corruption_.find(kind);
  if (it == corruption_.end()) {
    throw ParameterError("schedule does not cover '" + std::string(name(kind)) + "'");
  }
  const auto s = it->second.find(p);
  if (s == it->second.end()) {
    throw ParameterError("schedule has no parameter '" + std::string(p) + "' for '" +
                         std::string(name(kind)) + "'");
  }
  return s->second;
}

double SeveritySchedule::param(CorruptionKind kind, std::string_view p, int severity) const {
  if (severity < 1 || severity > kSeverityLevels) {
    throw ParameterError("severity " + std::to_string(severity) + " outside 1..5");
  }
  return series(kind, p)[static_cast<std::size_t>(severity - 1)];
}

void SeveritySchedule::set(CorruptionKind kind, std::string_view p, const Series& values) {
  if (find_descriptor(corruption_params(kind), p) == nullptr) {
    throw ParameterError("no parameter '" + std::string(p) + "' for '" + std::string(name(kind)) + "'");
  }
  corruption_[kind][std::string(p)] = values;
}

double SeveritySchedule::perturbation_param(PerturbationKind kind, std::string_view p) const {
  const auto it = perturbation_.find(kind);
  if (it != perturbation_.end()) {
    const auto v = it->second.find(p);
    if (v != it->second.end()) return v->second;
  }
  throw ParameterError("schedule has no parameter '" + std::string(p) + "' for perturbation '" +
                       std::string(name(kind)) + "'");
}

void SeveritySchedule::set_perturbation_param(PerturbationKind kind, std::string_view p, double value) {
  if (find_descriptor(perturbation_params(kind), p) == nullptr) {
    throw ParameterError("no parameter '" + std::string(p) + "' for perturbation '" +
                         std::string(name(kind)) + "'");
  }
  perturbation_[kind][std::string(p)] = value;
}

void SeveritySchedule::validate() const {
  for (const auto& [kind, values] : corruption_) {
    const std::string kname(name(kind));
    const auto params = corruption_params(kind);
    std::array<bool, kSeverityLevels - 1> moved{};
    for (const auto& d : params) {
      const auto it = values.find(d.name);
      if (it == values.end()) {
        throw ParameterError("schedule [" + kname + "]: missing parameter '" + std::string(d.name) + "'");
      }
      const Series& s = it->second;
      for (std::size_t i = 0; i < s.size(); ++i) {
        check_bounds(d, s[i], "schedule [" + kname + "] " + std::string(d.name));
      }
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double a = s[i];
        const double b = s[i + 1];
        const std::string where = "schedule [" + kname + "] " + std::string(d.name) + ": severity " +
                                  std::to_string(i + 1) + " -> " + std::to_string(i + 2);
        switch (d.trend) {
          case Trend::increasing:
            if (b < a) throw ParameterError(where + " decreases");
            moved[i] = moved[i] || b > a;
            break;
          case Trend::decreasing:
            if (b > a) throw ParameterError(where + " increases");
            moved[i] = moved[i] || b < a;
            break;
          case Trend::fixed:
            if (b != a) throw ParameterError(where + " must stay constant");
            break;
        }
      }
    }
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (!moved[i]) {
        throw ParameterError("schedule [" + kname + "]: no parameter changes strictly from severity " +
                             std::to_string(i + 1) + " to " + std::to_string(i + 2));
      }
    }
  }
  for (auto kind : all_perturbation_kinds()) {
    for (const auto& d : perturbation_params(kind)) {
      const std::string where = "schedule [perturbation." + std::string(name(kind)) + "] " + std::string(d.name);
      const auto it = perturbation_.find(kind);
      if (it == perturbation_.end() || !it->second.contains(d.name)) {
        throw ParameterError(where + ": missing");
      }
      check_bounds(d, it->second.find(d.name)->second, where);
    }
  }
}

std::filesystem::path default_schedule_path() {
  const char* env = std::getenv("CORRUPTION_BENCH_SCHEDULE");
  if (env == nullptr || *env == '\0') return {};
  return env;
}

SeveritySchedule resolve_schedule(const std::filesystem::path& explicit_path) {
  if (!explicit_path.empty()) return SeveritySchedule::load(explicit_path);
  const auto env = default_schedule_path();
  if (!env.empty()) return SeveritySchedule::load(env);
  return SeveritySchedule::defaults();
}

}  // namespace cbench
