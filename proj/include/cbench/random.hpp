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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>

namespace cbench {

/// Domain tag mixed into a stream key: an image id, a kind name, a severity,
/// a frame index.
using StreamTag = std::variant<std::int64_t, std::string>;

/// Counter-based random stream.
///
/// The key is a hash of (root_seed, tags); draw i is a SplitMix64 finalizer
/// applied to key + (i + 1) * golden_gamma. Nothing depends on the host
/// standard library's distributions, so a given (seed, tags) produces the
/// same sequence everywhere. Streams are cheap values; give each worker its
/// own.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t root_seed, std::initializer_list<StreamTag> tags = {});

  /// Stream keyed by this stream's key plus one more tag. Independent of how
  /// many draws this stream has made.
  RandomStream child(const StreamTag& tag) const;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t draws() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Unbiased integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;
  /// Integer in [lo, hi] inclusive.
  std::int64_t integer(std::int64_t lo, std::int64_t hi) noexcept;
  /// Standard normal (Box-Muller, second variate cached).
  double normal() noexcept;
  double normal(double mean, double stddev) noexcept { return mean + stddev * normal(); }
  /// Poisson variate. Inversion below mean 12, PTRS transformed rejection up
  /// to 1000, rounded normal approximation above.
  std::uint64_t poisson(double mean) noexcept;

  /// Seed for a derived entity, e.g. hash(seed, item id, kind, severity).
  static std::uint64_t derive(std::uint64_t root_seed, std::initializer_list<StreamTag> tags);

 private:
  RandomStream(std::uint64_t key, bool) noexcept : key_(key) {}

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace cbench
