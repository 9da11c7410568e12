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

#include "cbench/kinds.hpp"

#include <algorithm>
#include <string>

#include "cbench/error.hpp"

namespace cbench {
namespace {

struct CorruptionInfo {
  CorruptionKind kind;
  std::string_view name;
  std::string_view label;
  Category category;
};

constexpr std::array<CorruptionInfo, kCorruptionKindCount> kCorruptions{{
    {CorruptionKind::gaussian_noise, "gaussian_noise", "Gauss.", Category::noise},
    {CorruptionKind::shot_noise, "shot_noise", "Shot", Category::noise},
    {CorruptionKind::impulse_noise, "impulse_noise", "Impulse", Category::noise},
    {CorruptionKind::defocus_blur, "defocus_blur", "Defocus", Category::blur},
    {CorruptionKind::glass_blur, "glass_blur", "Glass", Category::blur},
    {CorruptionKind::motion_blur, "motion_blur", "Motion", Category::blur},
    {CorruptionKind::zoom_blur, "zoom_blur", "Zoom", Category::blur},
    {CorruptionKind::snow, "snow", "Snow", Category::weather},
    {CorruptionKind::frost, "frost", "Frost", Category::weather},
    {CorruptionKind::fog, "fog", "Fog", Category::weather},
    {CorruptionKind::brightness, "brightness", "Bright", Category::weather},
    {CorruptionKind::contrast, "contrast", "Contrast", Category::digital},
    {CorruptionKind::elastic, "elastic", "Elastic", Category::digital},
    {CorruptionKind::pixelate, "pixelate", "Pixel", Category::digital},
    {CorruptionKind::jpeg, "jpeg", "JPEG", Category::digital},
    {CorruptionKind::speckle_noise, "speckle_noise", "Speckle", Category::noise},
    {CorruptionKind::gaussian_blur, "gaussian_blur", "G.Blur", Category::blur},
    {CorruptionKind::spatter, "spatter", "Spatter", Category::weather},
    {CorruptionKind::saturate, "saturate", "Saturate", Category::digital},
}};

struct PerturbationInfo {
  PerturbationKind kind;
  std::string_view name;
  std::string_view label;
  Category category;
  SequenceMode mode;
};

constexpr std::array<PerturbationInfo, kPerturbationKindCount> kPerturbations{{
    {PerturbationKind::gaussian_noise, "gaussian_noise", "Gaussian", Category::noise, SequenceMode::noise},
    {PerturbationKind::shot_noise, "shot_noise", "Shot", Category::noise, SequenceMode::noise},
    {PerturbationKind::motion_blur, "motion_blur", "Motion", Category::blur, SequenceMode::temporal},
    {PerturbationKind::zoom_blur, "zoom_blur", "Zoom", Category::blur, SequenceMode::temporal},
    {PerturbationKind::snow, "snow", "Snow", Category::weather, SequenceMode::temporal},
    {PerturbationKind::brightness, "brightness", "Bright", Category::weather, SequenceMode::temporal},
    {PerturbationKind::translate, "translate", "Translate", Category::digital, SequenceMode::temporal},
    {PerturbationKind::rotate, "rotate", "Rotate", Category::digital, SequenceMode::temporal},
    {PerturbationKind::tilt, "tilt", "Tilt", Category::digital, SequenceMode::temporal},
    {PerturbationKind::scale, "scale", "Scale", Category::digital, SequenceMode::temporal},
    {PerturbationKind::speckle_noise, "speckle_noise", "Speckle", Category::noise, SequenceMode::noise},
    {PerturbationKind::gaussian_blur, "gaussian_blur", "G.Blur", Category::blur, SequenceMode::temporal},
    {PerturbationKind::spatter, "spatter", "Spatter", Category::weather, SequenceMode::temporal},
    {PerturbationKind::shear, "shear", "Shear", Category::digital, SequenceMode::temporal},
}};

const CorruptionInfo& info(CorruptionKind k) {
  const auto i = static_cast<std::size_t>(k);
  if (i >= kCorruptions.size()) throw ParameterError("unknown corruption kind " + std::to_string(i));
  return kCorruptions[i];
}
const PerturbationInfo& info(PerturbationKind k) {
  const auto i = static_cast<std::size_t>(k);
  if (i >= kPerturbations.size()) throw ParameterError("unknown perturbation kind " + std::to_string(i));
  return kPerturbations[i];
}

template <class Kind, std::size_t N, class Find, class IsMain>
std::vector<Kind> parse_filter(std::string_view list, const std::array<Kind, N>& all, Find find,
                               IsMain is_main, std::string_view main_group, const char* what) {
  std::vector<bool> chosen(N, false);
  std::size_t start = 0;
  bool any = false;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view tok = list.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      any = true;
      if (tok == "all") {
        std::fill(chosen.begin(), chosen.end(), true);
      } else if (tok == main_group) {
        for (std::size_t i = 0; i < N; ++i) chosen[i] = chosen[i] || is_main(all[i]);
      } else if (tok == "validation") {
        for (std::size_t i = 0; i < N; ++i) chosen[i] = chosen[i] || !is_main(all[i]);
      } else if (auto k = find(tok)) {
        chosen[static_cast<std::size_t>(*k)] = true;
      } else {
        throw ParameterError(std::string("unknown ") + what + " '" + std::string(tok) + "'");
      }
    }
    start = end + 1;
  }
  if (!any) throw ParameterError(std::string("empty ") + what + " filter");
  std::vector<Kind> out;
  for (std::size_t i = 0; i < N; ++i) {
    if (chosen[i]) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

const std::array<CorruptionKind, kCorruptionKindCount>& all_corruption_kinds() {
  static const auto kinds = [] {
    std::array<CorruptionKind, kCorruptionKindCount> a{};
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = kCorruptions[i].kind;
    return a;
  }();
  return kinds;
}

const std::array<PerturbationKind, kPerturbationKindCount>& all_perturbation_kinds() {
  static const auto kinds = [] {
    std::array<PerturbationKind, kPerturbationKindCount> a{};
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = kPerturbations[i].kind;
    return a;
  }();
  return kinds;
}

std::string_view name(CorruptionKind kind) { return info(kind).name; }
std::string_view name(PerturbationKind kind) { return info(kind).name; }
std::string_view short_label(CorruptionKind kind) { return info(kind).label; }
std::string_view short_label(PerturbationKind kind) { return info(kind).label; }
Category category(CorruptionKind kind) { return info(kind).category; }
Category category(PerturbationKind kind) { return info(kind).category; }

std::string_view name(Category c) {
  switch (c) {
    case Category::noise: return "Noise";
    case Category::blur: return "Blur";
    case Category::weather: return "Weather";
    case Category::digital: return "Digital";
  }
  return "?";
}

std::string_view name(SequenceMode m) { return m == SequenceMode::noise ? "noise" : "temporal"; }
std::string_view name(Difficulty d) { return d == Difficulty::normal ? "normal" : "hard"; }

bool is_benchmark(CorruptionKind kind) {
  return static_cast<std::size_t>(kind) < kBenchmarkCorruptionCount;
}

bool is_common(PerturbationKind kind) {
  return static_cast<std::size_t>(kind) < kCommonPerturbationCount;
}

SequenceMode sequence_mode(PerturbationKind kind) { return info(kind).mode; }

std::optional<CorruptionKind> find_corruption_kind(std::string_view n) {
  for (const auto& c : kCorruptions) {
    if (c.name == n) return c.kind;
  }
  return std::nullopt;
}

std::optional<PerturbationKind> find_perturbation_kind(std::string_view n) {
  for (const auto& p : kPerturbations) {
    if (p.name == n) return p.kind;
  }
  return std::nullopt;
}

CorruptionKind parse_corruption_kind(std::string_view n) {
  if (auto k = find_corruption_kind(n)) return *k;
  throw ParameterError("unknown corruption kind '" + std::string(n) + "'");
}

PerturbationKind parse_perturbation_kind(std::string_view n) {
  if (auto k = find_perturbation_kind(n)) return *k;
  throw ParameterError("unknown perturbation kind '" + std::string(n) + "'");
}

SequenceMode parse_sequence_mode(std::string_view n) {
  if (n == "noise") return SequenceMode::noise;
  if (n == "temporal") return SequenceMode::temporal;
  throw ParameterError("unknown sequence mode '" + std::string(n) + "'");
}

Difficulty parse_difficulty(std::string_view n) {
  if (n == "normal") return Difficulty::normal;
  if (n == "hard") return Difficulty::hard;
  throw ParameterError("unknown difficulty '" + std::string(n) + "'");
}

std::vector<FramePair> frame_pairs(SequenceMode mode, int n_frames, int stride) {
  if (n_frames < 2) throw ParameterError("a sequence needs at least 2 frames");
  if (stride != 1 && stride != 2) throw ParameterError("stride must be 1 or 2");
  if (mode == SequenceMode::noise && stride != 1) {
    throw ParameterError("stride 2 is defined only for temporal sequences");
  }
  std::vector<FramePair> pairs;
  for (int j = stride; j < n_frames; ++j) {
    pairs.push_back({mode == SequenceMode::noise ? 0 : j - stride, j});
  }
  return pairs;
}

std::vector<CorruptionKind> parse_corruption_filter(std::string_view list) {
  return parse_filter(list, all_corruption_kinds(), find_corruption_kind,
                      [](CorruptionKind k) { return is_benchmark(k); }, "benchmark",
                      "corruption kind");
}

std::vector<PerturbationKind> parse_perturbation_filter(std::string_view list) {
  return parse_filter(list, all_perturbation_kinds(), find_perturbation_kind,
                      [](PerturbationKind k) { return is_common(k); }, "common",
                      "perturbation kind");
}

}  // namespace cbench
