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

// Prints corpus-mean distortion per corruption kind and severity for a
// schedule, to tune the default ladder.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cbench/corruptions.hpp"
#include "cbench/quality.hpp"
#include "cbench/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"severity schedule calibration"};
  int count = 20;
  int size = 224;
  std::string kinds = "all";
  std::string schedule_path;
  app.add_option("--images", count, "corpus size");
  app.add_option("--size", size, "image side");
  app.add_option("--kinds", kinds, "kind filter");
  app.add_option("--schedule", schedule_path, "schedule file");
  std::string solve;
  double lo = 0.0;
  double hi = 1.0;
  double first = 0.05;
  double last = 0.5;
  app.add_option("--solve", solve, "kind:param to bisect against 1-ssim targets");
  app.add_option("--lo", lo, "search range low");
  app.add_option("--hi", hi, "search range high");
  app.add_option("--first", first, "target at severity 1");
  app.add_option("--last", last, "target at severity 5");
  bool dump = false;
  app.add_flag("--dump", dump, "print the built-in schedule as ini and exit");
  CLI11_PARSE(app, argc, argv);

  if (dump) {
    std::fputs(cbench::SeveritySchedule::defaults().serialize().c_str(), stdout);
    return 0;
  }
  cbench::SeveritySchedule schedule = cbench::resolve_schedule(schedule_path);
  std::vector<cbench::ImageBuffer> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(cbench::synthetic_image(size, size, 1, i));

  if (!solve.empty()) {
    const auto colon = solve.find(':');
    const auto kind = cbench::parse_corruption_kind(solve.substr(0, colon));
    const std::string param = solve.substr(colon + 1);
    auto series = schedule.series(kind, param);
    auto measure = [&](double v, int s) {
      auto trial = series;
      trial[static_cast<std::size_t>(s - 1)] = v;
      cbench::SeveritySchedule sc = schedule;
      sc.set(kind, param, trial);
      double d = 0.0;
      for (int i = 0; i < count; ++i) {
        const std::string id = "img_" + std::to_string(i);
        const cbench::CorruptionSpec spec{kind, s, cbench::derive_corruption_seed(1, id, kind, s)};
        d += cbench::distortion(corpus[static_cast<std::size_t>(i)],
                                cbench::apply_corruption(corpus[static_cast<std::size_t>(i)], spec, sc),
                                cbench::DistortionMeasure::one_minus_ssim) / count;
      }
      return d;
    };
    const bool rising = measure(hi, 1) > measure(lo, 1);
    for (int s = 1; s <= 5; ++s) {
      const double target = first + (last - first) * (s - 1) / 4.0;
      double a = lo;
      double b = hi;
      for (int it = 0; it < 16; ++it) {
        const double m = 0.5 * (a + b);
        if ((measure(m, s) < target) == rising) a = m; else b = m;
      }
      series[static_cast<std::size_t>(s - 1)] = 0.5 * (a + b);
      std::printf("severity %d target %.3f -> %s = %.5g\n", s, target, param.c_str(), 0.5 * (a + b));
      std::fflush(stdout);
    }
    return 0;
  }

  std::printf("%-16s %-44s %s\n", "kind", "1-ssim s1..s5", "mean_l2 s1..s5");
  for (auto kind : cbench::parse_corruption_filter(kinds)) {
    double ssim_d[5] = {};
    double l2[5] = {};
    for (int s = 1; s <= 5; ++s) {
      for (int i = 0; i < count; ++i) {
        const std::string id = "img_" + std::to_string(i);
        const cbench::CorruptionSpec spec{kind, s, cbench::derive_corruption_seed(1, id, kind, s)};
        const cbench::ImageBuffer out = cbench::apply_corruption(corpus[static_cast<std::size_t>(i)], spec, schedule);
        ssim_d[s - 1] += cbench::distortion(corpus[static_cast<std::size_t>(i)], out, cbench::DistortionMeasure::one_minus_ssim) / count;
        l2[s - 1] += cbench::distortion(corpus[static_cast<std::size_t>(i)], out, cbench::DistortionMeasure::mean_l2) / count;
      }
    }
    std::printf("%-16s", std::string(cbench::name(kind)).c_str());
    for (double d : ssim_d) std::printf(" %.3f", d);
    std::printf("   ");
    for (double d : l2) std::printf(" %.4f", d);
    std::printf("\n");
    std::fflush(stdout);
  }
  return 0;
}
