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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cbench/image.hpp"
#include "cbench/manifest.hpp"
#include "cbench/metrics.hpp"
#include "cbench/predictions.hpp"

namespace cbench {

/// Built-in deterministic classifiers for exercising the pipeline without
/// a model:
///   constant    always ranks 0, 1, ..., K-1
///   flip        ranks `frame` first, so the top-1 class changes on every frame
///   pixel-hash  ranking keyed by quantized block means of the image
enum class ToyClassifier { constant, flip, pixel_hash };

ToyClassifier parse_toy_classifier(std::string_view s);
std::string_view name(ToyClassifier c);

/// K distinct classes from [0, n_classes). Throws ParameterError unless
/// 1 <= topk <= n_classes.
Ranking classify(ToyClassifier classifier, const ImageBuffer& img, int frame, int topk, int n_classes);

struct PredictOptions {
  ToyClassifier classifier = ToyClassifier::pixel_hash;
  int topk = 10;
  int n_classes = 1000;
  std::string model;  ///< defaults to the classifier name
  int jobs = 1;
};

/// One record per manifest record and frame, in manifest order. Clean
/// records read their source through the manifest's resolution preset.
std::vector<PredictionRecord> run_predictions(const DatasetManifest& manifest, const std::filesystem::path& dataset_dir,
                                              const PredictOptions& options);

}  // namespace cbench
