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
#include <fstream>
#include <sstream>

#include "cbench/classifiers.hpp"
#include "cbench/error.hpp"
#include "cbench/generate.hpp"
#include "cbench/predictions.hpp"
#include "cbench/report.hpp"
#include "cbench/synthetic.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cbench;
namespace fs = std::filesystem;
using cbench::testing::TempDir;

namespace {

const fs::path kFixture = fs::path(CBENCH_TEST_DIR) / "fixtures" / "ce_4item";

std::vector<PredictionRecord> parse_log(const std::string& text) {
  std::istringstream in(text);
  return parse_prediction_log(in);
}

// In-memory corruption manifest: `items` sources, every kind in `kinds` at
// all severities, plus clean records.
DatasetManifest corruption_manifest(const std::vector<CorruptionKind>& kinds, int items) {
  DatasetManifest m;
  m.type = DatasetType::corruption;
  for (int i = 0; i < items; ++i) {
    const std::string item = "i" + std::to_string(i);
    m.records.push_back({"clean/" + item, item, item + ".png", "clean", 0, 0, 1, {}, {"0"}});
    for (auto k : kinds) {
      for (int s = 1; s <= kSeverityLevels; ++s) {
        const std::string id = std::string(name(k)) + "/" + std::to_string(s) + "/" + item;
        m.records.push_back({id, item, item + ".png", std::string(name(k)), s, 0, 1, {id + ".png"}, {"0"}});
      }
    }
  }
  return m;
}

Labels labels_for(int items) {
  Labels l;
  for (int i = 0; i < items; ++i) l["i" + std::to_string(i)] = 1;
  return l;
}

PredictionRecord pred(const std::string& id, ClassId top, int frame = 0) {
  return {id, frame, {top, 100, 101, 102, 103, 104}, "m", 0};
}

// item i of a group is wrong when i < wrong
std::vector<PredictionRecord> log_with_errors(const DatasetManifest& m, const std::function<int(const ManifestRecord&)>& wrong) {
  std::vector<PredictionRecord> log;
  for (const auto& r : m.records) {
    const int i = std::stoi(r.item.substr(1));
    log.push_back(pred(r.id, i < wrong(r) ? 0 : 1));
  }
  return log;
}

struct Dataset {
  TempDir tmp;
  DatasetManifest manifest;
  explicit Dataset(const std::string& tag, int images = 3) : tmp(tag) {
    write_synthetic_corpus(tmp.path() / "src", images, 32, 32, 21);
    PerturbationOptions o;
    o.source_dir = tmp.path() / "src";
    o.out_dir = tmp.path() / "out";
    o.kinds = parse_perturbation_filter("all");
    manifest = generate_perturbations(o);
  }
  fs::path dir() const { return tmp.path() / "out"; }
};

}  // namespace

TEST_CASE("prediction log parsing") {
  const auto log = parse_log(
      "{\"id\": \"a\", \"frame\": 2, \"topk\": [5, 4, 3], \"model\": \"r50\"}\n"
      "\n"
      "{\"topk\": [1], \"id\": \"b\", \"extra\": true}\n");
  REQUIRE(log.size() == 2);
  CHECK(log[0].id == "a");
  CHECK(log[0].frame == 2);
  CHECK(log[0].topk == Ranking{5, 4, 3});
  CHECK(log[0].model == "r50");
  CHECK(log[0].line == 1);
  CHECK(log[1].frame == 0);
  CHECK(log[1].line == 3);
  CHECK(parse_log(format_prediction(log[0]))[0].topk == log[0].topk);

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_log(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string ok = "{\"id\": \"a\", \"topk\": [1]}\n";
  CHECK(line_of(ok + "{\"id\": \"a\", \"topk\": [1]\n") == 2);
  CHECK(line_of(ok + ok + "[1, 2]\n") == 3);
  CHECK(line_of("{\"id\": 3, \"topk\": [1]}") == 1);
  CHECK(line_of("{\"id\": \"a\", \"topk\": []}") == 1);
  CHECK(line_of("{\"id\": \"a\", \"topk\": [-1]}") == 1);
  CHECK(line_of("{\"id\": \"a\", \"topk\": [1.5]}") == 1);
  CHECK(line_of("{\"id\": \"a\", \"frame\": -1, \"topk\": [1]}") == 1);
  CHECK(line_of("{\"id\": \"a\"}") == 1);
}

TEST_CASE("labels and class names") {
  std::istringstream in("# comment\nimg_0\t3\r\nn01/x\t12\n\n");
  const auto labels = parse_labels(in);
  CHECK(labels.size() == 2);
  CHECK(labels.at("n01/x") == 12);
  CHECK(labels.at("img_0") == 3);
  std::istringstream bad("a\t1\nb 2\n");
  try {
    parse_labels(bad);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream dup("a\t1\na\t2\n");
  CHECK_THROWS_AS(parse_labels(dup), ParseError);
  std::istringstream neg("a\t-1\n");
  CHECK_THROWS_AS(parse_labels(neg), ParseError);
  std::istringstream names("0\ttench\n1\tgoldfish, carassius\n");
  CHECK(parse_class_names(names).at(1) == "goldfish, carassius");
}

TEST_CASE("validate_predictions diagnostics") {
  const auto m = corruption_manifest({CorruptionKind::fog}, 2);
  auto log = log_with_errors(m, [](const auto&) { return 0; });
  CHECK(validate_predictions(log, m).empty());

  auto missing = log;
  missing.erase(missing.begin() + 3);
  const auto d = validate_predictions(missing, m);
  REQUIRE(d.size() == 1);
  CHECK(d[0].code == "missing");
  CHECK(d[0].id == log[3].id);
  CHECK(has_errors(d));

  auto defects = log;
  defects.push_back(pred("fog/9/i0", 1));
  defects.push_back(log[2]);
  defects.push_back(pred(log[4].id, 1, 1));
  defects[5].topk = {1, 2, 1};
  std::vector<std::string> codes;
  for (const auto& x : validate_predictions(defects, m)) codes.push_back(x.code);
  std::sort(codes.begin(), codes.end());
  CHECK(codes == std::vector<std::string>{"duplicate", "duplicate_class", "extra", "frame_range"});

  auto no_clean = log;
  no_clean.erase(std::remove_if(no_clean.begin(), no_clean.end(), [](const auto& r) { return r.id.starts_with("clean/"); }),
                 no_clean.end());
  const auto w = validate_predictions(no_clean, m);
  CHECK(w.size() == 2);
  CHECK_FALSE(has_errors(w));
  CHECK(w[0].code == "missing_clean");
}

TEST_CASE("short rankings warn only where T5D is computed") {
  Dataset ds("eval_short", 1);
  PredictOptions o;
  o.topk = 6;
  auto log = run_predictions(ds.manifest, ds.dir(), o);
  CHECK(validate_predictions(log, ds.manifest).empty());
  log[40].topk.pop_back();
  const auto d = validate_predictions(log, ds.manifest);
  REQUIRE(d.size() == 1);
  CHECK(d[0].level == Diagnostic::Level::warning);
  CHECK(d[0].code == "short_topk");
  CHECK(d[0].id == log[40].id);
  CHECK(d[0].frame == log[40].frame);

  const auto cm = corruption_manifest({CorruptionKind::fog}, 1);
  auto clog = log_with_errors(cm, [](const auto&) { return 0; });
  for (auto& r : clog) r.topk.resize(1);
  CHECK(validate_predictions(clog, cm).empty());
}

TEST_CASE("hand-built 4-item fixture matches the hand calculation") {
  const auto m = DatasetManifest::load(kFixture / "manifest.json");
  const auto log = load_prediction_log(kFixture / "predictions.jsonl");
  const auto labels = load_labels(kFixture / "labels.tsv");
  std::ifstream expected_in(kFixture / "expected.txt");
  std::map<std::string, std::vector<double>> expected;
  std::string line;
  while (std::getline(expected_in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    for (double v; ls >> v;) expected[key].push_back(v);
  }
  const auto rep = evaluate(m, log, labels, builtin_profile("alexnet-paper"));
  REQUIRE(rep.corruptions.size() == 1);
  const auto& fog = rep.corruptions[0];
  CHECK(fog.kind == CorruptionKind::fog);
  REQUIRE(rep.clean_error);
  CHECK(*rep.clean_error == doctest::Approx(expected.at("clean_error")[0]).epsilon(1e-12));
  for (int s = 0; s < 5; ++s) {
    CHECK(*fog.error[static_cast<std::size_t>(s)] ==
          doctest::Approx(expected.at("error")[static_cast<std::size_t>(s)]).epsilon(1e-12));
  }
  CHECK(*fog.ce == doctest::Approx(expected.at("ce")[0]).epsilon(1e-12));
  CHECK(*fog.relative_ce == doctest::Approx(expected.at("relative_ce")[0]).epsilon(1e-12));
  CHECK(*rep.mce == *fog.ce);
  CHECK_FALSE(rep.complete);
  CHECK(rep.model == "fixture");
}

TEST_CASE("perfect predictions give mCE 0") {
  const auto kinds = parse_corruption_filter("all");
  const auto m = corruption_manifest(kinds, 3);
  const auto rep = evaluate(m, log_with_errors(m, [](const auto&) { return 0; }), labels_for(3),
                            builtin_profile("alexnet-paper"));
  CHECK(rep.complete);
  CHECK(*rep.mce == 0.0);
  CHECK(*rep.relative_mce == 0.0);
  CHECK(rep.corruptions.size() == 19);
}

TEST_CASE("a log reproducing the baseline's errors scores 100 everywhere") {
  // 1000 items per group, so every published mean error is a whole count
  const auto base = builtin_profile("alexnet-paper");
  const auto kinds = parse_corruption_filter("all");
  const auto m = corruption_manifest(kinds, 1000);
  auto wrong = [&](const ManifestRecord& r) {
    const double e = r.is_clean() ? base.clean_error : base.corruption_denom(parse_corruption_kind(r.kind));
    return static_cast<int>(std::lround(e * 1000));
  };
  const auto rep = evaluate(m, log_with_errors(m, wrong), labels_for(1000), base);
  CHECK(rep.complete);
  for (const auto& s : rep.corruptions) {
    CAPTURE(name(s.kind));
    CHECK(*s.ce == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*s.relative_ce == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(*rep.mce == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(*rep.relative_mce == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("unit baseline: mCE is the mean of raw per-kind error ratios") {
  const auto kinds = parse_corruption_filter("all");
  const auto m = corruption_manifest(kinds, 8);
  auto wrong = [](const ManifestRecord& r) {
    return r.is_clean() ? 1 : (static_cast<int>(r.kind.size()) + r.severity) % 9;
  };
  const auto log = log_with_errors(m, wrong);
  const auto rep = evaluate(m, log, labels_for(8), builtin_profile("unit"));
  double sum = 0.0;
  for (auto k : kinds) {
    if (!is_benchmark(k)) continue;
    double e = 0.0;
    for (int s = 1; s <= 5; ++s) e += ((static_cast<int>(name(k).size()) + s) % 9) / 8.0;
    sum += e / 5.0;
  }
  CHECK(*rep.mce == doctest::Approx(sum / 15.0).epsilon(1e-12));
  // aggregates are arithmetic means of the per-kind values
  double ce_sum = 0.0;
  for (const auto& s : rep.corruptions) ce_sum += is_benchmark(s.kind) ? *s.ce : 0.0;
  CHECK(std::abs(*rep.mce - ce_sum / 15.0) < 1e-9);
}

TEST_CASE("relative CE without clean predictions names E_clean") {
  const auto m = corruption_manifest({CorruptionKind::fog}, 2);
  auto log = log_with_errors(m, [](const auto&) { return 1; });
  log.erase(std::remove_if(log.begin(), log.end(), [](const auto& r) { return r.id.starts_with("clean/"); }), log.end());
  const auto rep = evaluate(m, log, labels_for(2), builtin_profile("alexnet-paper"));
  CHECK_FALSE(rep.clean_error);
  CHECK_FALSE(rep.corruptions[0].relative_ce);
  CHECK(rep.corruptions[0].ce);
  EvalOptions opt;
  opt.require_relative = true;
  try {
    evaluate(m, log, labels_for(2), builtin_profile("alexnet-paper"), opt);
    FAIL("no error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("E_clean") != std::string::npos);
  }
}

TEST_CASE("evaluate rejects defective logs and missing labels") {
  const auto m = corruption_manifest({CorruptionKind::fog}, 2);
  auto log = log_with_errors(m, [](const auto&) { return 0; });
  auto broken = log;
  broken.pop_back();
  CHECK_THROWS_AS(evaluate(m, broken, labels_for(2), builtin_profile("unit")), ValidationError);
  Labels partial{{"i0", 1}};
  CHECK_THROWS_AS(evaluate(m, log, partial, builtin_profile("unit")), ValidationError);
  EvalOptions opt;
  opt.stride = 2;
  CHECK_THROWS_AS(evaluate(m, log, labels_for(2), builtin_profile("unit"), opt), ParameterError);
}

TEST_CASE("constant and flipping classifiers over a perturbation set") {
  Dataset ds("eval_pipeline");
  PredictOptions o;
  o.classifier = ToyClassifier::constant;
  const auto still = evaluate(ds.manifest, run_predictions(ds.manifest, ds.dir(), o), {}, builtin_profile("alexnet-paper"));
  CHECK(still.complete);
  CHECK(*still.mfr == 0.0);
  CHECK(*still.mt5d == 0.0);
  for (const auto& s : still.perturbations) {
    CHECK(s.fp == 0.0);
    CHECK(s.ut5d == 0.0);
    CHECK(s.pairs == 3 * 30);
  }
  o.classifier = ToyClassifier::flip;
  const auto log = run_predictions(ds.manifest, ds.dir(), o);
  for (int stride : {1, 2}) {
    EvalOptions opt;
    opt.stride = stride;
    const auto moving = evaluate(ds.manifest, log, {}, builtin_profile("alexnet-paper"), opt);
    for (const auto& s : moving.perturbations) {
      CAPTURE(name(s.kind));
      CHECK(s.fp == 1.0);
      CHECK(s.pairs == 3 * (sequence_mode(s.kind) == SequenceMode::temporal ? 31 - stride : 30));
    }
  }
}

TEST_CASE("truncating K=10 to K=6 leaves every T5D unchanged") {
  Dataset ds("eval_truncate", 2);
  PredictOptions o;
  o.classifier = ToyClassifier::pixel_hash;
  o.n_classes = 12;
  auto log = run_predictions(ds.manifest, ds.dir(), o);
  const auto full = evaluate(ds.manifest, log, {}, builtin_profile("alexnet-paper"));
  double moved = 0.0;
  for (const auto& s : full.perturbations) moved += s.ut5d;
  CHECK(moved > 0.0);
  for (auto& r : log) r.topk.resize(6);
  const auto cut = evaluate(ds.manifest, log, {}, builtin_profile("alexnet-paper"));
  REQUIRE(cut.perturbations.size() == full.perturbations.size());
  for (std::size_t i = 0; i < cut.perturbations.size(); ++i) {
    CHECK(cut.perturbations[i].t5d == full.perturbations[i].t5d);
    CHECK(cut.perturbations[i].fr == full.perturbations[i].fr);
  }
}

TEST_CASE("hard difficulty is recorded and echoed; stride 2 changes the pairs") {
  TempDir tmp("eval_hard");
  write_synthetic_corpus(tmp.path() / "src", 2, 32, 32, 22);
  PerturbationOptions po;
  po.source_dir = tmp.path() / "src";
  po.out_dir = tmp.path() / "out";
  po.kinds = {PerturbationKind::translate, PerturbationKind::gaussian_noise};
  po.difficulty = Difficulty::hard;
  const auto m = generate_perturbations(po);
  CHECK(DatasetManifest::load(tmp.path() / "out" / "manifest.json").difficulty == Difficulty::hard);
  PredictOptions o;
  const auto log = run_predictions(m, tmp.path() / "out", o);
  EvalOptions opt;
  opt.stride = 2;
  const auto rep = evaluate(m, log, {}, builtin_profile("alexnet-paper"), opt);
  CHECK(rep.difficulty == Difficulty::hard);
  CHECK(rep.stride == 2);
  CHECK(render_text(rep).find("Difficulty: hard, stride 2") != std::string::npos);
  CHECK(render_json(rep).find("\"difficulty\": \"hard\"") != std::string::npos);
}

TEST_CASE("predictions are deterministic and validate against their manifest") {
  Dataset ds("eval_predict", 2);
  PredictOptions o;
  o.jobs = 1;
  const auto a = run_predictions(ds.manifest, ds.dir(), o);
  o.jobs = 3;
  const auto b = run_predictions(ds.manifest, ds.dir(), o);
  REQUIRE(a.size() == ds.manifest.records.size() * 31);
  std::string ta;
  std::string tb;
  for (const auto& r : a) ta += format_prediction(r) + "\n";
  for (const auto& r : b) tb += format_prediction(r) + "\n";
  CHECK(ta == tb);
  CHECK(validate_predictions(a, ds.manifest).empty());
  CHECK_THROWS_AS(classify(ToyClassifier::constant, ImageBuffer(), 0, 11, 10), ParameterError);
  CHECK(classify(ToyClassifier::flip, ImageBuffer(), 13, 3, 10) == Ranking{3, 0, 1});
}
