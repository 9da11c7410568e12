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

#include <filesystem>
#include <fstream>

#include "cbench/error.hpp"
#include "cbench/metrics.hpp"
#include "support.hpp"

using namespace cbench;

TEST_CASE("alexnet-paper profile carries the published denominators") {
  const BaselineProfile b = builtin_profile("alexnet-paper");
  CHECK(b.clean_error == 0.435);
  CHECK(b.corruption_denom(CorruptionKind::gaussian_noise) == 0.886);
  CHECK(b.corruption_denom(CorruptionKind::brightness) == 0.565);
  CHECK(b.corruption_denom(CorruptionKind::saturate) == 0.658);
  CHECK(b.fp_denom(PerturbationKind::gaussian_noise) == 0.2365);
  CHECK(b.fp_denom(PerturbationKind::scale) == 0.2353);
  CHECK(b.fp_denom(PerturbationKind::shear) == 0.1066);
  CHECK(b.ut5d_denom(PerturbationKind::scale) == 4.48);
  CHECK(b.ut5d_denom(PerturbationKind::gaussian_blur) == 0.70);
  CHECK(b.corruption_denoms.size() == kCorruptionKindCount);
  CHECK(b.fp_denoms.size() == kPerturbationKindCount);
  CHECK(b.ut5d_denoms.size() == kPerturbationKindCount);
}

TEST_CASE("unit profile is all ones") {
  const BaselineProfile b = builtin_profile("unit");
  CHECK(b.clean_error == 0.0);
  for (auto k : all_corruption_kinds()) CHECK(b.corruption_denom(k) == 1.0);
  for (auto k : all_perturbation_kinds()) {
    CHECK(b.fp_denom(k) == 1.0);
    CHECK(b.ut5d_denom(k) == 1.0);
  }
}

TEST_CASE("profile text round trips and hashes stably") {
  for (const auto& n : builtin_profile_names()) {
    const BaselineProfile b = builtin_profile(n);
    const BaselineProfile back = BaselineProfile::parse(b.serialize());
    CHECK(back.serialize() == b.serialize());
    CHECK(back.hash() == b.hash());
    CHECK(b.hash().size() == 64);
  }
  CHECK(builtin_profile("unit").hash() != builtin_profile("alexnet-paper").hash());
}

TEST_CASE("shipped profile files equal the built-in profiles") {
  for (const auto& n : builtin_profile_names()) {
    const auto path = std::filesystem::path(CBENCH_DATA_DIR) / "profiles" / (n + ".ini");
    CAPTURE(path);
    CHECK(BaselineProfile::load(path).serialize() == builtin_profile(n).serialize());
  }
}

TEST_CASE("profile parsing errors") {
  CHECK_THROWS_AS(BaselineProfile::parse("[profile]\nclean_error = 0.2\n"), ParameterError);
  CHECK_THROWS_AS(BaselineProfile::parse("[profile]\nname = x\n"), ParameterError);
  CHECK_THROWS_AS(BaselineProfile::parse("[profile]\nname = x\nclean_error = 0.2\n[fp_denoms]\nwobble = 1\n"),
                  ParameterError);
  CHECK_THROWS_AS(BaselineProfile::parse("[profile]\nname = x\nclean_error = 0.2\n[fp_denoms]\nrotate = 0\n"),
                  ParameterError);
  CHECK_THROWS_AS(BaselineProfile::parse("[profile]\nname = x\nclean_error = abc\n"), ParameterError);
  CHECK_THROWS_AS(BaselineProfile::parse("[other]\nname = x\n"), ParameterError);
  CHECK_THROWS_AS(builtin_profile("vgg"), ParameterError);
}

TEST_CASE("partial profiles report the missing kind on use") {
  const BaselineProfile b =
      BaselineProfile::parse("[profile]\nname = tiny\nclean_error = 0.3\n[fp_denoms]\nrotate = 0.2\n");
  CHECK(b.fp_denom(PerturbationKind::rotate) == 0.2);
  CHECK_THROWS_WITH_AS(b.fp_denom(PerturbationKind::tilt), doctest::Contains("tilt"), ParameterError);
}

TEST_CASE("resolve_profile accepts names and paths") {
  CHECK(resolve_profile("unit").name == "unit");
  cbench::testing::TempDir dir("profile");
  const auto path = dir.path() / "mine.ini";
  std::ofstream(path) << "[profile]\nname = mine\nclean_error = 0.25\n[ut5d_denoms]\nscale = 2\n";
  const BaselineProfile p = resolve_profile(path.string());
  CHECK(p.name == "mine");
  CHECK(p.ut5d_denom(PerturbationKind::scale) == 2.0);
  CHECK_THROWS_AS(resolve_profile((dir.path() / "none.ini").string()), ParameterError);
}
