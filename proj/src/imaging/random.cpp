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

#include "cbench/random.hpp"

#include <cmath>
#include <numbers>

namespace cbench {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// FNV-1a over a type byte followed by the tag payload. Integers are hashed as
// 8 little-endian bytes so the result does not depend on host byte order.
std::uint64_t hash_tag(const StreamTag& tag) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](unsigned char b) {
    h ^= b;
    h *= 0x100000001B3ULL;
  };
  if (const auto* i = std::get_if<std::int64_t>(&tag)) {
    feed(0x01);
    auto u = static_cast<std::uint64_t>(*i);
    for (int k = 0; k < 8; ++k) feed(static_cast<unsigned char>(u >> (8 * k)));
  } else {
    const auto& s = std::get<std::string>(tag);
    feed(0x02);
    auto n = static_cast<std::uint64_t>(s.size());
    for (int k = 0; k < 8; ++k) feed(static_cast<unsigned char>(n >> (8 * k)));
    for (char c : s) feed(static_cast<unsigned char>(c));
  }
  return h;
}

std::uint64_t absorb(std::uint64_t key, const StreamTag& tag) noexcept {
  return mix64(key ^ mix64(hash_tag(tag) + kGolden)) + kGolden;
}

double log_factorial(double k) noexcept { return std::lgamma(k + 1.0); }

}  // namespace

RandomStream::RandomStream(std::uint64_t root_seed, std::initializer_list<StreamTag> tags)
    : key_(mix64(root_seed + kGolden)) {
  for (const auto& t : tags) key_ = absorb(key_, t);
}

RandomStream RandomStream::child(const StreamTag& tag) const {
  return RandomStream(absorb(key_, tag), true);
}

std::uint64_t RandomStream::derive(std::uint64_t root_seed, std::initializer_list<StreamTag> tags) {
  return RandomStream(root_seed, tags).key();
}

std::uint64_t RandomStream::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RandomStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::below(std::uint64_t n) noexcept {
  // Lemire's nearly-divisionless rejection.
  std::uint64_t x = next_u64();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<__uint128_t>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t RandomStream::integer(std::int64_t lo, std::int64_t hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

double RandomStream::normal() noexcept {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

std::uint64_t RandomStream::poisson(double mean) noexcept {
  if (!(mean > 0.0)) return 0;
  if (mean < 12.0) {
    // Sequential-search inversion.
    const double u = uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && k < 1000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  if (mean <= 1000.0) {
    // PTRS (Hoermann 1993), exact for mean >= 10.
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform();
      const double us = 0.5 - std::fabs(u);
      const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
          -mean + k * loglam - log_factorial(k)) {
        return static_cast<std::uint64_t>(k);
      }
    }
  }
  const double x = std::round(mean + std::sqrt(mean) * normal());
  return x < 0.0 ? 0 : static_cast<std::uint64_t>(x);
}

}  // namespace cbench
