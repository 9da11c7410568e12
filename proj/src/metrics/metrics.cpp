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

#include "cbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "cbench/error.hpp"

namespace cbench {
namespace {

// ranks are 1-based; anything past the cap counts as the cap
int capped_rank(const Ranking& list, ClassId c) {
  const int limit = std::min<int>(kRankCap - 1, static_cast<int>(list.size()));
  for (int r = 0; r < limit; ++r) {
    if (list[static_cast<std::size_t>(r)] == c) return r + 1;
  }
  return kRankCap;
}

// number of j in [2, k] with 1 <= j - 1 <= 5
int cumulative(int k) { return std::clamp(k - 1, 0, 5); }

void require_distinct(const Ranking& list, const char* what) {
  std::set<ClassId> seen;
  for (ClassId c : list) {
    if (!seen.insert(c).second) {
      throw ValidationError(std::string(what) + ": class " + std::to_string(c) + " ranked twice");
    }
  }
}

}  // namespace

int top5_distance(const Ranking& a, const Ranking& b) {
  require_distinct(a, "top5_distance");
  require_distinct(b, "top5_distance");
  int d = 0;
  for (int i = 1; i <= 5; ++i) {
    // a list shorter than 5 has an unknown class here, absent from b
    const int s = i <= static_cast<int>(a.size()) ? capped_rank(b, a[static_cast<std::size_t>(i - 1)]) : kRankCap;
    d += std::abs(cumulative(s) - cumulative(i));
  }
  return d;
}

double zipfian_distance(const Ranking& a, const Ranking& b) {
  require_distinct(a, "zipfian_distance");
  require_distinct(b, "zipfian_distance");
  if (a.size() != b.size()) throw ValidationError("zipfian_distance: rankings differ in length");
  std::unordered_map<ClassId, std::size_t> pos;
  for (std::size_t r = 0; r < b.size(); ++r) pos.emplace(b[r], r + 1);
  double d = 0.0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const auto it = pos.find(a[i - 1]);
    if (it == pos.end()) {
      throw ValidationError("zipfian_distance: class " + std::to_string(a[i - 1]) + " missing from one ranking");
    }
    const double wi = 1.0 / static_cast<double>(i);
    const double ws = 1.0 / static_cast<double>(it->second);
    d += wi * std::abs(wi - ws);
  }
  return d;
}

double flip_probability(std::span<const ClassId> top1, SequenceMode mode, int stride) {
  const auto pairs = frame_pairs(mode, static_cast<int>(top1.size()), stride);
  if (pairs.empty()) throw ParameterError("sequence too short for stride " + std::to_string(stride));
  std::size_t flips = 0;
  for (const auto& p : pairs) {
    if (top1[static_cast<std::size_t>(p.a)] != top1[static_cast<std::size_t>(p.b)]) ++flips;
  }
  return static_cast<double>(flips) / static_cast<double>(pairs.size());
}

double ut5d(std::span<const Ranking> frames, SequenceMode mode, int stride) {
  StabilityTally t;
  t.add(frames, mode, stride);
  return t.ut5d();
}

void StabilityTally::add(std::span<const Ranking> frames, SequenceMode mode, int stride) {
  const auto fp_pairs = frame_pairs(mode, static_cast<int>(frames.size()), stride);
  for (const auto& p : fp_pairs) {
    const Ranking& earlier = frames[static_cast<std::size_t>(p.a)];
    const Ranking& later = frames[static_cast<std::size_t>(p.b)];
    if (earlier.empty() || later.empty()) throw ValidationError("empty ranking in sequence");
    ++pairs;
    if (earlier.front() != later.front()) ++flips;
    distance += top5_distance(later, earlier);
  }
}

double StabilityTally::fp() const {
  if (pairs == 0) throw ParameterError("no frame pairs");
  return static_cast<double>(flips) / static_cast<double>(pairs);
}

double StabilityTally::ut5d() const {
  if (pairs == 0) throw ParameterError("no frame pairs");
  return distance / static_cast<double>(pairs);
}

// ---------------------------------------------------------------------------

bool ErrorTable::complete(CorruptionKind kind) const {
  const auto it = entries.find(kind);
  if (it == entries.end()) return false;
  return std::all_of(it->second.begin(), it->second.end(), [](const auto& e) { return e.has_value(); });
}

double ErrorTable::error(CorruptionKind kind, int severity) const {
  if (severity < 1 || severity > kSeverityLevels) throw ParameterError("severity must lie in 1..5");
  const auto it = entries.find(kind);
  if (it == entries.end() || !it->second[static_cast<std::size_t>(severity - 1)]) {
    throw ValidationError("no error recorded for " + std::string(name(kind)) + " severity " +
                          std::to_string(severity));
  }
  return *it->second[static_cast<std::size_t>(severity - 1)];
}

void ErrorTable::set(CorruptionKind kind, int severity, double e) {
  if (severity < 1 || severity > kSeverityLevels) throw ParameterError("severity must lie in 1..5");
  if (!(e >= 0.0 && e <= 1.0)) throw ParameterError("error rate outside [0, 1]");
  entries[kind][static_cast<std::size_t>(severity - 1)] = e;
}

ErrorTable error_table(std::span<const Outcome> outcomes) {
  std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> counts;  // wrong, total
  for (const auto& o : outcomes) {
    const int k = o.kind ? static_cast<int>(*o.kind) : -1;
    if (o.kind && (o.severity < 1 || o.severity > kSeverityLevels)) {
      throw ParameterError("severity must lie in 1..5");
    }
    auto& c = counts[{k, o.kind ? o.severity : 0}];
    if (o.predicted != o.label) ++c.first;
    ++c.second;
  }
  ErrorTable t;
  for (const auto& [key, c] : counts) {
    const double e = static_cast<double>(c.first) / static_cast<double>(c.second);
    if (key.first < 0) {
      t.clean_error = e;
    } else {
      t.set(static_cast<CorruptionKind>(key.first), key.second, e);
    }
  }
  return t;
}

double corruption_error(const ErrorTable& table, const BaselineProfile& baseline, CorruptionKind kind,
                        bool relative) {
  if (!table.complete(kind)) {
    throw ValidationError("error table incomplete for " + std::string(name(kind)));
  }
  double num = 0.0;
  for (int s = 1; s <= kSeverityLevels; ++s) num += table.error(kind, s);
  double den = kSeverityLevels * baseline.corruption_denom(kind);
  if (relative) {
    if (!table.clean_error) {
      throw ValidationError("relative CE needs the clean error E_clean (predictions on the clean set)");
    }
    num -= kSeverityLevels * *table.clean_error;
    den -= kSeverityLevels * baseline.clean_error;
  }
  if (!(den > 0.0)) {
    throw UndefinedMeasureError(std::string(relative ? "relative " : "") + "CE of " + std::string(name(kind)) +
                                ": baseline denominator is not positive");
  }
  return num / den;
}

double mce(const std::map<CorruptionKind, double>& ce) {
  double sum = 0.0;
  for (auto kind : all_corruption_kinds()) {
    if (!is_benchmark(kind)) continue;
    const auto it = ce.find(kind);
    if (it == ce.end()) throw ValidationError("mCE needs " + std::string(name(kind)));
    sum += it->second;
  }
  return sum / static_cast<double>(kBenchmarkCorruptionCount);
}

double flip_rate(double fp, const BaselineProfile& baseline, PerturbationKind kind) {
  return fp / baseline.fp_denom(kind);
}

double t5d(double u, const BaselineProfile& baseline, PerturbationKind kind) {
  return u / baseline.ut5d_denom(kind);
}

FlipRates flip_rate(const std::map<PerturbationKind, double>& fp, const BaselineProfile& baseline) {
  FlipRates out;
  for (const auto& [kind, v] : fp) out.fr[kind] = flip_rate(v, baseline, kind);
  out.mfr = mean_over_common(out.fr);
  return out;
}

double mean_over_common(const std::map<PerturbationKind, double>& values) {
  double sum = 0.0;
  for (auto kind : all_perturbation_kinds()) {
    if (!is_common(kind)) continue;
    const auto it = values.find(kind);
    if (it == values.end()) throw ValidationError("aggregate needs " + std::string(name(kind)));
    sum += it->second;
  }
  return sum / static_cast<double>(kCommonPerturbationCount);
}

}  // namespace cbench
