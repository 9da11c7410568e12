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

#include "cbench/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cbench/error.hpp"
#include "cbench/generate.hpp"
#include "cbench/random.hpp"

namespace cbench {
namespace {

constexpr int kGrid = 4;
constexpr double kLevels = 4.0;

// coarse signature: per-channel means of a 4x4 block grid, 4 levels each
std::int64_t signature(const ImageBuffer& img) {
  std::uint64_t h = 1469598103934665603ull;
  for (int gy = 0; gy < kGrid; ++gy) {
    for (int gx = 0; gx < kGrid; ++gx) {
      const int x0 = gx * img.width() / kGrid;
      const int x1 = (gx + 1) * img.width() / kGrid;
      const int y0 = gy * img.height() / kGrid;
      const int y1 = (gy + 1) * img.height() / kGrid;
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int y = y0; y < y1; ++y) {
          for (int x = x0; x < x1; ++x) sum += img.at(x, y, c);
        }
        const double n = std::max(1, (x1 - x0) * (y1 - y0));
        const auto q = static_cast<std::uint64_t>(std::min(kLevels - 1, std::floor(sum / n * kLevels)));
        h = (h ^ q) * 1099511628211ull;
      }
    }
  }
  return static_cast<std::int64_t>(h >> 1);
}

Ranking ranked_from(ClassId first, int topk) {
  Ranking r{first};
  for (ClassId c = 0; static_cast<int>(r.size()) < topk; ++c) {
    if (c != first) r.push_back(c);
  }
  return r;
}

}  // namespace

ToyClassifier parse_toy_classifier(std::string_view s) {
  if (s == "constant") return ToyClassifier::constant;
  if (s == "flip") return ToyClassifier::flip;
  if (s == "pixel-hash") return ToyClassifier::pixel_hash;
  throw ParameterError("unknown classifier '" + std::string(s) + "' (constant, flip, pixel-hash)");
}

std::string_view name(ToyClassifier c) {
  switch (c) {
    case ToyClassifier::constant: return "constant";
    case ToyClassifier::flip: return "flip";
    case ToyClassifier::pixel_hash: return "pixel-hash";
  }
  return "?";
}

Ranking classify(ToyClassifier classifier, const ImageBuffer& img, int frame, int topk, int n_classes) {
  if (topk < 1 || topk > n_classes) throw ParameterError("topk must lie in 1..number of classes");
  switch (classifier) {
    case ToyClassifier::constant: return ranked_from(0, topk);
    case ToyClassifier::flip: return ranked_from(frame % n_classes, topk);
    case ToyClassifier::pixel_hash: break;
  }
  RandomStream rs(0, {std::int64_t{signature(img)}});
  std::vector<ClassId> pool(static_cast<std::size_t>(n_classes));
  std::iota(pool.begin(), pool.end(), ClassId{0});
  for (int i = 0; i < topk; ++i) {
    const auto j = static_cast<std::size_t>(i) + rs.below(static_cast<std::uint64_t>(n_classes - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(topk));
  return pool;
}

std::vector<PredictionRecord> run_predictions(const DatasetManifest& manifest, const std::filesystem::path& dataset_dir,
                                              const PredictOptions& o) {
  if (o.topk < 1 || o.topk > o.n_classes) throw ParameterError("topk must lie in 1..number of classes");
  const std::string model = o.model.empty() ? std::string(name(o.classifier)) : o.model;
  const bool needs_pixels = o.classifier == ToyClassifier::pixel_hash;
  std::vector<std::vector<PredictionRecord>> per_record(manifest.records.size());
  parallel_for(manifest.records.size(), o.jobs, [&](std::size_t i) {
    const ManifestRecord& rec = manifest.records[i];
    std::vector<ImageBuffer> frames;
    if (needs_pixels) {
      if (rec.is_clean()) {
        frames.push_back(load_source(std::filesystem::path(manifest.source_root) / rec.source, manifest.resolution));
      } else if (manifest.type == DatasetType::perturbation) {
        frames = load_sequence(manifest, rec, dataset_dir);
      } else {
        frames.push_back(load_image(dataset_dir / rec.outputs.at(0)));
      }
    }
    const ImageBuffer blank;
    for (int f = 0; f < rec.n_frames; ++f) {
      const ImageBuffer& img = needs_pixels ? frames[static_cast<std::size_t>(f)] : blank;
      per_record[i].push_back({rec.id, f, classify(o.classifier, img, f, o.topk, o.n_classes), model, 0});
    }
  });
  std::vector<PredictionRecord> out;
  for (auto& v : per_record) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cbench
