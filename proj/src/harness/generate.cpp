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

#include "cbench/generate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cbench/corruptions.hpp"
#include "cbench/error.hpp"
#include "cbench/filter.hpp"
#include "cbench/hash.hpp"
#include "cbench/perturbations.hpp"

namespace cbench {
namespace {

namespace fs = std::filesystem;

ImageBuffer center_crop(const ImageBuffer& img, int side) {
  const int x0 = (img.width() - side) / 2;
  const int y0 = (img.height() - side) / 2;
  ImageBuffer out(side, side);
  for (int y = 0; y < side; ++y) {
    std::copy_n(img.row(y0 + y) + 3 * x0, 3 * side, out.row(y));
  }
  return out;
}

ImageBuffer resize_crop(const ImageBuffer& img, int shorter, int side) {
  const double s = static_cast<double>(shorter) / std::min(img.width(), img.height());
  const int w = std::max(side, static_cast<int>(std::lround(img.width() * s)));
  const int h = std::max(side, static_cast<int>(std::lround(img.height() * s)));
  const auto filter = s < 1.0 ? ResampleFilter::box : ResampleFilter::bilinear;
  return center_crop(resample(img, w, h, filter), side);
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  fs::create_directories(path.parent_path());
  write_file_bytes(path, bytes);
}

struct ItemResult {
  std::vector<ManifestRecord> records;
  std::vector<ItemError> errors;
};

std::vector<fs::path> sources_or_throw(const fs::path& root) {
  auto sources = list_source_images(root);
  if (sources.empty()) throw ParameterError("no PNG or JPEG images under " + root.string());
  return sources;
}

DatasetManifest manifest_header(const GenerateOptions& o, DatasetType type) {
  if (o.jobs < 1) throw ParameterError("--jobs must be at least 1");
  const auto presets = resolution_presets();
  if (std::find(presets.begin(), presets.end(), o.resolution) == presets.end()) {
    throw ParameterError("unknown resolution preset '" + o.resolution + "' (native, 224, 299)");
  }
  o.schedule.validate();
  DatasetManifest m;
  m.type = type;
  m.seed = o.seed;
  m.schedule = o.schedule.serialize();
  m.schedule_hash = o.schedule.hash();
  m.baseline_profile = o.baseline_profile;
  m.codec = codec_identity();
  m.source_root = fs::absolute(o.source_dir).lexically_normal().generic_string();
  m.resolution = o.resolution;
  return m;
}

// merges per-item results in item order and writes the manifest
void finish(DatasetManifest& m, std::vector<ItemResult>& results, const fs::path& out_dir,
            const std::function<bool(const ManifestRecord&, const ManifestRecord&)>& order) {
  for (auto& r : results) {
    for (auto& rec : r.records) m.records.push_back(std::move(rec));
    for (auto& e : r.errors) m.errors.push_back(std::move(e));
  }
  std::stable_sort(m.records.begin(), m.records.end(), order);
  m.complete = m.errors.empty();
  fs::create_directories(out_dir);
  m.save(out_dir / kManifestFileName);
}

template <class Kind>
std::size_t kind_index(const std::string& kind_name, std::optional<Kind> (*find)(std::string_view)) {
  const auto k = find(kind_name);
  return k ? static_cast<std::size_t>(*k) + 1 : 0;  // clean sorts first
}

}  // namespace

std::vector<std::string> resolution_presets() { return {"native", "224", "299"}; }

ImageBuffer apply_resolution(const ImageBuffer& img, const std::string& preset) {
  if (preset == "native") return img;
  if (preset == "224") return resize_crop(img, 256, 224);
  if (preset == "299") return resize_crop(img, 342, 299);
  throw ParameterError("unknown resolution preset '" + preset + "' (native, 224, 299)");
}

ImageBuffer load_source(const fs::path& path, const std::string& preset) {
  return apply_resolution(load_image(path), preset);
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (i < failed_at) {
            failed_at = i;
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string frame_file_name(int frame, int n_frames) {
  int digits = 2;
  for (int v = n_frames - 1; v >= 100; v /= 10) ++digits;
  std::string num = std::to_string(frame);
  if (static_cast<int>(num.size()) < digits) num.insert(0, static_cast<std::size_t>(digits) - num.size(), '0');
  return "frame_" + num + ".png";
}

DatasetManifest generate_corruptions(const CorruptionOptions& o) {
  DatasetManifest m = manifest_header(o, DatasetType::corruption);
  m.format = o.format;
  m.quality = o.quality;
  if (o.quality < 1 || o.quality > 100) throw ParameterError("JPEG quality must lie in 1..100");
  const auto kinds = o.kinds.empty() ? parse_corruption_filter("benchmark") : o.kinds;
  for (int s : o.severities) {
    if (s < 1 || s > kSeverityLevels) throw ParameterError("severities must lie in 1..5");
  }
  const auto sources = sources_or_throw(o.source_dir);
  const std::string ext = file_extension(o.format);

  std::vector<ItemResult> results(sources.size());
  parallel_for(sources.size(), o.jobs, [&](std::size_t i) {
    const fs::path& rel = sources[i];
    const std::string item = source_item_id(rel);
    auto& res = results[i];
    try {
      const fs::path src = o.source_dir / rel;
      const ImageBuffer img = load_source(src, o.resolution);
      require_benchmark_size(img);
      if (o.clean_records) {
        res.records.push_back({"clean/" + item, item, rel.generic_string(), "clean", 0, 0, 1, {}, {sha256_file(src)}});
      }
      for (auto kind : kinds) {
        for (int s : o.severities) {
          const CorruptionSpec spec{kind, s, derive_corruption_seed(o.seed, item, kind, s)};
          const auto bytes = encode_image(apply_corruption(img, spec, o.schedule), o.format, o.quality);
          fs::path out_rel = fs::path(std::string(name(kind))) / std::to_string(s) / rel;
          out_rel.replace_extension(ext);
          write_bytes(o.out_dir / out_rel, bytes);
          res.records.push_back({std::string(name(kind)) + "/" + std::to_string(s) + "/" + item, item,
                                 rel.generic_string(), std::string(name(kind)), s, spec.seed, 1,
                                 {out_rel.generic_string()}, {sha256_hex(bytes)}});
        }
      }
    } catch (const std::exception& e) {
      res.errors.push_back({item, e.what()});
    }
  });

  finish(m, results, o.out_dir, [](const ManifestRecord& a, const ManifestRecord& b) {
    const auto ka = kind_index<CorruptionKind>(a.kind, find_corruption_kind);
    const auto kb = kind_index<CorruptionKind>(b.kind, find_corruption_kind);
    return std::tie(ka, a.severity) < std::tie(kb, b.severity);
  });
  return m;
}

DatasetManifest generate_perturbations(const PerturbationOptions& o) {
  DatasetManifest m = manifest_header(o, DatasetType::perturbation);
  m.format = ImageFormat::png;
  m.quality = 100;
  m.difficulty = o.difficulty;
  m.n_frames = o.n_frames;
  m.storage = o.storage;
  m.fill = o.fill;
  if (o.n_frames < kMinSequenceFrames) {
    throw ParameterError("sequences need at least " + std::to_string(kMinSequenceFrames) + " frames");
  }
  const auto kinds = o.kinds.empty() ? parse_perturbation_filter("common") : o.kinds;
  const auto sources = sources_or_throw(o.source_dir);

  std::vector<ItemResult> results(sources.size());
  parallel_for(sources.size(), o.jobs, [&](std::size_t i) {
    const fs::path& rel = sources[i];
    const std::string item = source_item_id(rel);
    auto& res = results[i];
    try {
      const ImageBuffer img = load_source(o.source_dir / rel, o.resolution);
      for (auto kind : kinds) {
        PerturbationSpec spec;
        spec.kind = kind;
        spec.n_frames = o.n_frames;
        spec.difficulty = o.difficulty;
        spec.seed = derive_perturbation_seed(o.seed, item, kind, o.difficulty);
        spec.fill = o.fill;
        const auto seq = generate_sequence(img, spec, o.schedule);
        ManifestRecord rec{std::string(name(kind)) + "/" + item, item, rel.generic_string(),
                           std::string(name(kind)), 0, spec.seed, o.n_frames, {}, {}};
        const fs::path dir = fs::path(std::string(name(kind))) / item;
        if (o.storage == FrameStorage::frames) {
          for (int j = 0; j < o.n_frames; ++j) {
            const auto bytes = encode_image(seq.frames[static_cast<std::size_t>(j)], ImageFormat::png);
            const fs::path out_rel = dir / frame_file_name(j, o.n_frames);
            write_bytes(o.out_dir / out_rel, bytes);
            rec.outputs.push_back(out_rel.generic_string());
            rec.sha256.push_back(sha256_hex(bytes));
          }
        } else {
          ImageBuffer strip(img.width(), img.height() * o.n_frames);
          for (int j = 0; j < o.n_frames; ++j) {
            const auto& f = seq.frames[static_cast<std::size_t>(j)].data();
            std::copy(f.begin(), f.end(), strip.row(j * img.height()));
          }
          const auto bytes = encode_image(strip, ImageFormat::png);
          const fs::path out_rel = dir.string() + ".png";
          write_bytes(o.out_dir / out_rel, bytes);
          rec.outputs.push_back(out_rel.generic_string());
          rec.sha256.push_back(sha256_hex(bytes));
        }
        res.records.push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      res.errors.push_back({item, e.what()});
    }
  });

  finish(m, results, o.out_dir, [](const ManifestRecord& a, const ManifestRecord& b) {
    return kind_index<PerturbationKind>(a.kind, find_perturbation_kind) <
           kind_index<PerturbationKind>(b.kind, find_perturbation_kind);
  });
  return m;
}

std::vector<ImageBuffer> load_sequence(const DatasetManifest& manifest, const ManifestRecord& record,
                                       const fs::path& dataset_dir) {
  std::vector<ImageBuffer> frames;
  if (manifest.storage == FrameStorage::frames) {
    for (const auto& out : record.outputs) frames.push_back(load_image(dataset_dir / out));
  } else {
    if (record.outputs.size() != 1) throw FormatError("stack record " + record.id + " must have one output");
    const ImageBuffer strip = load_image(dataset_dir / record.outputs[0]);
    if (strip.height() % record.n_frames != 0) {
      throw FormatError("stack " + record.outputs[0] + " height is not a multiple of the frame count");
    }
    const int h = strip.height() / record.n_frames;
    for (int j = 0; j < record.n_frames; ++j) {
      ImageBuffer f(strip.width(), h);
      const float* src = strip.row(j * h);
      std::copy(src, src + f.size(), f.row(0));
      frames.push_back(std::move(f));
    }
  }
  if (static_cast<int>(frames.size()) != record.n_frames) {
    throw FormatError("record " + record.id + " lists " + std::to_string(frames.size()) + " frames, expected " +
                      std::to_string(record.n_frames));
  }
  return frames;
}

}  // namespace cbench
