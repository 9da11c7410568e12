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
#include <vector>

#include "cbench/corruptions.hpp"
#include "cbench/error.hpp"

namespace cbench {

int diamond_square_side(int side) {
  if (side < 2) return 3;
  int n = 2;
  while (n + 1 < side) n *= 2;
  return n + 1;
}

Plane diamond_square(int n, double roughness, RandomStream& stream, double amplitude) {
  if (n < 3 || ((n - 1) & (n - 2)) != 0) {
    throw ParameterError("diamond_square: side " + std::to_string(n) + " is not 2^k + 1");
  }
  if (!(roughness > 0.0 && roughness <= 1.0)) {
    throw ParameterError("diamond_square: roughness must lie in (0, 1]");
  }
  if (amplitude < 0.0) throw ParameterError("diamond_square: negative amplitude");

  const auto un = static_cast<std::size_t>(n);
  std::vector<double> g(un * un, 0.0);
  auto at = [&](int x, int y) -> double& {
    return g[static_cast<std::size_t>(y) * un + static_cast<std::size_t>(x)];
  };
  const int last = n - 1;
  at(0, 0) = stream.uniform();
  at(last, 0) = stream.uniform();
  at(0, last) = stream.uniform();
  at(last, last) = stream.uniform();

  double amp = amplitude;
  for (int step = last; step > 1; step /= 2) {
    const int half = step / 2;
    // square step
    for (int y = half; y < n; y += step) {
      for (int x = half; x < n; x += step) {
        const double avg = (at(x - half, y - half) + at(x + half, y - half) + at(x - half, y + half) +
                            at(x + half, y + half)) / 4.0;
        at(x, y) = avg + amp * stream.uniform(-1.0, 1.0);
      }
    }
    // diamond step
    for (int y = 0; y < n; y += half) {
      for (int x = (y / half) % 2 == 0 ? half : 0; x < n; x += step) {
        double avg = 0.0;
        if (y == 0 || y == last) {
          avg = (at(x - half, y) + at(x + half, y)) / 2.0;
        } else if (x == 0 || x == last) {
          avg = (at(x, y - half) + at(x, y + half)) / 2.0;
        } else {
          avg = (at(x - half, y) + at(x + half, y) + at(x, y - half) + at(x, y + half)) / 4.0;
        }
        at(x, y) = avg + amp * stream.uniform(-1.0, 1.0);
      }
    }
    amp *= roughness;
  }

  const auto [lo_it, hi_it] = std::minmax_element(g.begin(), g.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;
  Plane out(n, n);
  auto dst = out.data();
  for (std::size_t i = 0; i < g.size(); ++i) {
    dst[i] = range > 0.0 ? static_cast<float>((g[i] - lo) / range) : 0.0f;
  }
  return out;
}

}  // namespace cbench
