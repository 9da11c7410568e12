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

#include "doctest.h"

#include <algorithm>

#include "cbench/corruptions.hpp"
#include "cbench/error.hpp"
#include "cbench/hash.hpp"

using namespace cbench;

TEST_CASE("side validation") {
  RandomStream rs(1);
  for (int bad : {0, 1, 2, 4, 6, 128, 130}) CHECK_THROWS_AS(diamond_square(bad, 0.5, rs), ParameterError);
  CHECK_THROWS_AS(diamond_square(9, 0.0, rs), ParameterError);
  CHECK_THROWS_AS(diamond_square(9, 1.5, rs), ParameterError);
  CHECK_NOTHROW(diamond_square(3, 1.0, rs));
  CHECK(diamond_square_side(224) == 257);
  CHECK(diamond_square_side(257) == 257);
  CHECK(diamond_square_side(258) == 513);
  CHECK(diamond_square_side(5) == 5);
}

TEST_CASE("normalized to the unit interval") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomStream rs(seed, {"ds"});
    const Plane p = diamond_square(65, 0.6, rs);
    const auto [lo, hi] = std::minmax_element(p.data().begin(), p.data().end());
    CHECK(*lo == 0.0f);
    CHECK(*hi == 1.0f);
  }
}

TEST_CASE("zero amplitude gives the bilinear surface of the corners") {
  RandomStream corners(5, {"corners"});
  const double c00 = corners.uniform();
  const double c10 = corners.uniform();
  const double c01 = corners.uniform();
  const double c11 = corners.uniform();
  RandomStream rs(5, {"corners"});
  const int n = 33;
  const Plane p = diamond_square(n, 0.5, rs, 0.0);
  const double lo = std::min({c00, c10, c01, c11});
  const double hi = std::max({c00, c10, c01, c11});
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const double u = static_cast<double>(x) / (n - 1);
      const double v = static_cast<double>(y) / (n - 1);
      const double f = (1 - u) * (1 - v) * c00 + u * (1 - v) * c10 + (1 - u) * v * c01 + u * v * c11;
      CHECK(p.at(x, y) == doctest::Approx((f - lo) / (hi - lo)).epsilon(1e-5));
    }
  }
}

TEST_CASE("same seed gives the same map, roughness changes smoothness") {
  RandomStream a(9, {"fog"});
  RandomStream b(9, {"fog"});
  const Plane pa = diamond_square(129, 0.5, a);
  CHECK(pa == diamond_square(129, 0.5, b));
  auto tv = [](const Plane& p) {
    double s = 0.0;
    for (int y = 0; y < p.height(); ++y) {
      for (int x = 1; x < p.width(); ++x) s += std::abs(p.at(x, y) - p.at(x - 1, y));
    }
    return s;
  };
  RandomStream c(9, {"fog"});
  CHECK(tv(diamond_square(129, 0.9, c)) > tv(pa));
}

TEST_CASE("golden content hash") {
  RandomStream rs(2024, {"golden"});
  CHECK(content_hash(diamond_square(129, 0.5, rs)) == "22149ff21ff16db9344877b7804108404ce2fb785fc9406c418138efaf59abec");
}
