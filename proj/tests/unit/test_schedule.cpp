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

#include <cstdlib>
#include <fstream>

#include "cbench/error.hpp"
#include "cbench/schedule.hpp"
#include "support.hpp"

using namespace cbench;

TEST_CASE("defaults cover every kind and validate") {
  const SeveritySchedule s = SeveritySchedule::defaults();
  for (auto k : all_corruption_kinds()) {
    CHECK(s.covers(k));
    for (const auto& d : corruption_params(k)) CHECK_NOTHROW(s.series(k, d.name));
  }
  for (auto k : all_perturbation_kinds()) {
    for (const auto& d : perturbation_params(k)) CHECK_NOTHROW(s.perturbation_param(k, d.name));
  }
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("serialize and parse round trip") {
  const SeveritySchedule s = SeveritySchedule::defaults();
  const SeveritySchedule back = SeveritySchedule::parse(s.serialize());
  CHECK(back.serialize() == s.serialize());
  CHECK(back.hash() == s.hash());
  CHECK(s.hash().size() == 64);
}

TEST_CASE("shipped schedule file equals the built-in defaults") {
  const auto path = std::filesystem::path(CBENCH_DATA_DIR) / "default_schedule.ini";
  CHECK(SeveritySchedule::load(path).serialize() == SeveritySchedule::defaults().serialize());
}

TEST_CASE("partial files override only the named kinds") {
  const SeveritySchedule s = SeveritySchedule::parse("[gaussian_noise]\nsigma = 0.1 0.2 0.3 0.4 0.5\n");
  CHECK(s.param(CorruptionKind::gaussian_noise, "sigma", 3) == 0.3);
  CHECK(s.series(CorruptionKind::fog, "weight") == SeveritySchedule::defaults().series(CorruptionKind::fog, "weight"));
  CHECK(s.hash() != SeveritySchedule::defaults().hash());
}

TEST_CASE("perturbation sections") {
  const SeveritySchedule s = SeveritySchedule::parse("[perturbation.rotate]\nstep_degrees = 0.25\n");
  CHECK(s.perturbation_param(PerturbationKind::rotate, "step_degrees") == 0.25);
  CHECK_THROWS_AS(SeveritySchedule::parse("[perturbation.rotate]\nangle = 1\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[perturbation.warp]\nstep = 1\n"), ParameterError);
}

TEST_CASE("monotonicity violations are rejected") {
  // sigma must not decrease
  CHECK_THROWS_AS(SeveritySchedule::parse("[gaussian_noise]\nsigma = 0.1 0.2 0.15 0.4 0.5\n"), ParameterError);
  // no strict change between severities 2 and 3
  CHECK_THROWS_AS(SeveritySchedule::parse("[gaussian_noise]\nsigma = 0.1 0.2 0.2 0.4 0.5\n"), ParameterError);
  // photons trend downward
  CHECK_THROWS_AS(SeveritySchedule::parse("[shot_noise]\nphotons = 3 5 12 25 60\n"), ParameterError);
  // fixed parameter must stay constant
  CHECK_THROWS_AS(SeveritySchedule::parse("[fog]\nweight = .1 .2 .3 .4 .5\nroughness = .5 .5 .5 .5 .5\nfloor = .5 .5 .5 .5 .6\n"),
                  ParameterError);
  // one strictly moving parameter per step is enough
  CHECK_NOTHROW(SeveritySchedule::parse("[fog]\nweight = .1 .2 .3 .4 .5\nroughness = .5 .5 .5 .5 .5\nfloor = .5 .5 .5 .5 .5\n"));
}

TEST_CASE("malformed entries name the offending key") {
  try {
    SeveritySchedule::parse("[pixelate]\nfactor = 1 2 3 4\n");
    FAIL("expected ParameterError");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("pixelate") != std::string::npos);
    CHECK(std::string(e.what()).find("factor") != std::string::npos);
  }
  CHECK_THROWS_AS(SeveritySchedule::parse("[pixelate]\nfactor = 1 2 3 4 x\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[pixelate]\nfactor = 0.5 2 3 4 5\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[pixelate]\nfactor = 1 2 3 4 5 6\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[pixelate]\nscale = 1 2 3 4 5\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[glass_blur]\nsigma = 1 2 3 4 5\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[rain]\nx = 1 2 3 4 5\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("sigma = 1\n"), ParameterError);
  CHECK_THROWS_AS(SeveritySchedule::parse("[jpeg\nquality = 1\n"), ParameterError);
}

TEST_CASE("severity and kind lookups") {
  const SeveritySchedule s = SeveritySchedule::defaults();
  CHECK_THROWS_AS(s.param(CorruptionKind::jpeg, "quality", 0), ParameterError);
  CHECK_THROWS_AS(s.param(CorruptionKind::jpeg, "quality", 6), ParameterError);
  CHECK_THROWS_AS(s.param(CorruptionKind::jpeg, "sigma", 1), ParameterError);
}

TEST_CASE("frost textures are listed and resolved against the file") {
  cbench::testing::TempDir dir("sched");
  {
    std::ofstream f(dir.path() / "s.ini");
    f << "[frost]\nimage_weight = 1 .8 .7 .65 .6\nframe_weight = x\n";
  }
  CHECK_THROWS_AS(SeveritySchedule::load(dir.path() / "s.ini"), ParameterError);
  {
    std::ofstream f(dir.path() / "s.ini");
    f << "[frost]\nimage_weight = 1 .8 .7 .65 .6\nfrost_weight = .4 .6 .7 .7 .75\ntextures = a.png; /abs/b.jpg\n";
  }
  const SeveritySchedule s = SeveritySchedule::load(dir.path() / "s.ini");
  REQUIRE(s.frost_textures().size() == 2);
  CHECK(s.frost_textures()[0] == (dir.path() / "a.png").string());
  CHECK(s.frost_textures()[1] == "/abs/b.jpg");
  CHECK(SeveritySchedule::parse(s.serialize()).frost_textures() == s.frost_textures());
}

TEST_CASE("environment variable selects the schedule file") {
  cbench::testing::TempDir dir("sched_env");
  {
    std::ofstream f(dir.path() / "env.ini");
    f << "[jpeg]\nquality = 50 40 30 20 10\n";
  }
  ::setenv("CORRUPTION_BENCH_SCHEDULE", (dir.path() / "env.ini").c_str(), 1);
  CHECK(default_schedule_path() == dir.path() / "env.ini");
  CHECK(resolve_schedule({}).param(CorruptionKind::jpeg, "quality", 1) == 50);
  ::unsetenv("CORRUPTION_BENCH_SCHEDULE");
  CHECK(default_schedule_path().empty());
  CHECK(resolve_schedule({}).serialize() == SeveritySchedule::defaults().serialize());
  CHECK_THROWS_AS(resolve_schedule(dir.path() / "missing.ini"), IoError);
}
