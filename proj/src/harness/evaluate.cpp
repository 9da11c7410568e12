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

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cbench/error.hpp"
#include "cbench/report.hpp"

namespace cbench {
namespace {

void require_valid(const std::vector<PredictionRecord>& log, const DatasetManifest& manifest) {
  const auto diagnostics = validate_predictions(log, manifest);
  if (!has_errors(diagnostics)) return;
  std::ostringstream msg;
  msg << "prediction log does not match the manifest:";
  int shown = 0;
  std::size_t errors = 0;
  for (const auto& d : diagnostics) {
    if (d.level != Diagnostic::Level::error) continue;
    ++errors;
    if (shown < 10) {
      msg << "\n  " << d.to_string();
      ++shown;
    }
  }
  if (errors > 10) msg << "\n  ... " << errors - 10 << " more";
  throw ValidationError(msg.str());
}

std::string model_name(const std::vector<PredictionRecord>& log) {
  for (const auto& r : log) {
    if (!r.model.empty()) return r.model;
  }
  return "model";
}

ClassId label_of(const Labels& labels, const std::string& item) {
  const auto it = labels.find(item);
  if (it == labels.end()) throw ValidationError("no label for item '" + item + "'");
  return it->second;
}

void evaluate_corruptions(RobustnessReport& rep, const DatasetManifest& manifest,
                          const std::vector<PredictionRecord>& log, const Labels& labels,
                          const BaselineProfile& baseline, const EvalOptions& options) {
  std::unordered_map<std::string, const ManifestRecord*> by_id;
  std::size_t clean_records = 0;
  for (const auto& r : manifest.records) {
    by_id.emplace(r.id, &r);
    if (r.is_clean()) ++clean_records;
  }
  std::size_t clean_predictions = 0;
  for (const auto& p : log) {
    if (by_id.at(p.id)->is_clean()) ++clean_predictions;
  }
  const bool have_clean = clean_records > 0 && clean_predictions == clean_records;

  std::vector<Outcome> outcomes;
  outcomes.reserve(log.size());
  for (const auto& p : log) {
    const ManifestRecord& rec = *by_id.at(p.id);
    Outcome o;
    o.predicted = p.topk.front();
    o.label = label_of(labels, rec.item);
    if (rec.is_clean()) {
      if (!have_clean) continue;
    } else {
      o.kind = parse_corruption_kind(rec.kind);
      o.severity = rec.severity;
      auto& tally = rep.classes[o.label];
      ++tally.total;
      if (o.predicted != o.label) ++tally.wrong;
    }
    outcomes.push_back(o);
  }
  const ErrorTable table = error_table(outcomes);
  rep.clean_error = table.clean_error;
  if (options.require_relative && !table.clean_error) {
    throw ValidationError("relative CE needs the clean error E_clean: the log has no predictions for the clean set");
  }

  double sum = 0.0;
  double rel_sum = 0.0;
  std::size_t n = 0;
  std::size_t n_rel = 0;
  for (auto kind : all_corruption_kinds()) {
    const auto it = table.entries.find(kind);
    if (it == table.entries.end()) continue;
    CorruptionScores s{kind, it->second, std::nullopt, std::nullopt};
    if (table.complete(kind)) {
      s.ce = corruption_error(table, baseline, kind, false);
      if (table.clean_error) s.relative_ce = corruption_error(table, baseline, kind, true);
    }
    if (is_benchmark(kind) && s.ce) {
      sum += *s.ce;
      ++n;
      if (s.relative_ce) {
        rel_sum += *s.relative_ce;
        ++n_rel;
      }
    }
    rep.corruptions.push_back(s);
  }
  if (n > 0) rep.mce = sum / static_cast<double>(n);
  if (n_rel > 0 && n_rel == n) rep.relative_mce = rel_sum / static_cast<double>(n_rel);
  rep.complete = n == kBenchmarkCorruptionCount;
}

void evaluate_perturbations(RobustnessReport& rep, const DatasetManifest& manifest,
                            const std::vector<PredictionRecord>& log, const BaselineProfile& baseline,
                            const EvalOptions& options) {
  std::unordered_map<std::string, std::vector<Ranking>> frames;
  for (const auto& r : manifest.records) frames[r.id].resize(static_cast<std::size_t>(r.n_frames));
  for (const auto& p : log) frames[p.id][static_cast<std::size_t>(p.frame)] = p.topk;

  std::map<PerturbationKind, StabilityTally> tallies;
  for (const auto& r : manifest.records) {
    const auto kind = parse_perturbation_kind(r.kind);
    const auto mode = sequence_mode(kind);
    // noise sequences are always compared against frame 0
    const int stride = mode == SequenceMode::noise ? 1 : options.stride;
    tallies[kind].add(frames.at(r.id), mode, stride);
  }
  double fr_sum = 0.0;
  double t5d_sum = 0.0;
  std::size_t n = 0;
  for (const auto& [kind, t] : tallies) {
    PerturbationScores s{kind, t.pairs, t.fp(), t.ut5d(), 0.0, 0.0};
    s.fr = flip_rate(s.fp, baseline, kind);
    s.t5d = t5d(s.ut5d, baseline, kind);
    if (is_common(kind)) {
      fr_sum += s.fr;
      t5d_sum += s.t5d;
      ++n;
    }
    rep.perturbations.push_back(s);
  }
  if (n > 0) {
    rep.mfr = fr_sum / static_cast<double>(n);
    rep.mt5d = t5d_sum / static_cast<double>(n);
  }
  rep.complete = n == kCommonPerturbationCount;
}

}  // namespace

RobustnessReport evaluate(const DatasetManifest& manifest, const std::vector<PredictionRecord>& log,
                          const Labels& labels, const BaselineProfile& baseline, const EvalOptions& options) {
  if (options.stride != 1 && options.stride != 2) throw ParameterError("stride must be 1 or 2");
  if (manifest.type == DatasetType::corruption && options.stride != 1) {
    throw ParameterError("stride applies to perturbation datasets only");
  }
  require_valid(log, manifest);
  RobustnessReport rep;
  rep.dataset = manifest.type;
  rep.model = model_name(log);
  rep.manifest_hash = manifest.content_hash();
  rep.baseline = baseline.name;
  rep.baseline_hash = baseline.hash();
  rep.difficulty = manifest.difficulty;
  rep.stride = options.stride;
  if (manifest.type == DatasetType::corruption) {
    evaluate_corruptions(rep, manifest, log, labels, baseline, options);
  } else {
    evaluate_perturbations(rep, manifest, log, baseline, options);
  }
  rep.complete = rep.complete && manifest.complete;
  return rep;
}

}  // namespace cbench
