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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbench/classifiers.hpp"
#include "cbench/error.hpp"
#include "cbench/generate.hpp"
#include "cbench/manifest.hpp"
#include "cbench/metrics.hpp"
#include "cbench/predictions.hpp"
#include "cbench/report.hpp"
#include "cbench/schedule.hpp"
#include "cbench/synthetic.hpp"

namespace fs = std::filesystem;
using namespace cbench;

namespace {

struct Args {
  std::string src, out, manifest, log, labels, class_names, report_path;
  std::string kinds, severities = "1,2,3,4,5", format, schedule, resolution = "native";
  std::string baseline = "alexnet-paper", difficulty = "normal", storage = "frames", fill = "clamp";
  std::string classifier = "pixel-hash", model, profile;
  std::uint64_t seed = 0;
  int quality = 85, jobs = 1, frames = 31, stride = 1, topk = 10, classes = 1000;
  int count = 50, size = 224;
  bool no_clean = false, relative = false, skip_files = false;
};

std::vector<int> parse_severities(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParameterError("bad severity '" + tok + "'");
    }
    if (v < 1 || v > kSeverityLevels) throw ParameterError("severities must lie in 1..5");
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (out.empty()) throw ParameterError("empty severity list");
  std::sort(out.begin(), out.end());
  return out;
}

fs::path manifest_file(const std::string& arg) {
  const fs::path p(arg);
  return fs::is_directory(p) ? p / kManifestFileName : p;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string read_text(const std::string& path) {
  const auto bytes = read_file_bytes(path);
  return {bytes.begin(), bytes.end()};
}

int emit_report(const RobustnessReport& rep, const std::string& format, const std::string& out,
                const std::string& names_path) {
  ClassNames names;
  if (!names_path.empty()) names = load_class_names(names_path);
  switch (parse_report_format(format)) {
    case ReportFormat::text: write_text(out, render_text(rep, names_path.empty() ? nullptr : &names)); break;
    case ReportFormat::csv: write_text(out, render_csv(rep)); break;
    case ReportFormat::json: write_text(out, render_json(rep)); break;
    case ReportFormat::plots: {
      if (out.empty() || out == "-") throw ParameterError("plots need --out <directory>");
      fs::create_directories(out);
      for (const auto& [file, svg] : render_plots(rep)) {
        write_text((fs::path(out) / file).string(), svg);
        std::cout << (fs::path(out) / file).string() << '\n';
      }
      break;
    }
  }
  return 0;
}

int print_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::size_t errors = 0;
  for (const auto& d : diagnostics) {
    std::cout << d.to_string() << '\n';
    if (d.level == Diagnostic::Level::error) ++errors;
  }
  std::cout << diagnostics.size() << " diagnostic(s), " << errors << " error(s)\n";
  return diagnostics.empty() ? 0 : 1;
}

int run_gen_c(const Args& a) {
  CorruptionOptions o;
  o.source_dir = a.src;
  o.out_dir = a.out;
  o.seed = a.seed;
  o.schedule = resolve_schedule(a.schedule);
  o.baseline_profile = resolve_profile(a.baseline).name;
  o.resolution = a.resolution;
  o.jobs = a.jobs;
  o.kinds = parse_corruption_filter(a.kinds.empty() ? "benchmark" : a.kinds);
  o.severities = parse_severities(a.severities);
  o.format = parse_image_format(a.format.empty() ? "jpeg" : a.format);
  o.quality = a.quality;
  o.clean_records = !a.no_clean;
  const auto m = generate_corruptions(o);
  std::cout << m.records.size() << " records, manifest " << (fs::path(a.out) / kManifestFileName).string()
            << "\ncontent hash " << m.content_hash() << '\n';
  for (const auto& e : m.errors) std::cerr << "error: " << e.item << ": " << e.message << '\n';
  return m.complete ? 0 : 1;
}

int run_gen_p(const Args& a) {
  PerturbationOptions o;
  o.source_dir = a.src;
  o.out_dir = a.out;
  o.seed = a.seed;
  o.schedule = resolve_schedule(a.schedule);
  o.baseline_profile = resolve_profile(a.baseline).name;
  o.resolution = a.resolution;
  o.jobs = a.jobs;
  o.kinds = parse_perturbation_filter(a.kinds.empty() ? "common" : a.kinds);
  o.n_frames = a.frames;
  o.difficulty = parse_difficulty(a.difficulty);
  o.storage = parse_frame_storage(a.storage);
  o.fill = parse_fill(a.fill);
  const auto m = generate_perturbations(o);
  std::cout << m.records.size() << " sequences, manifest " << (fs::path(a.out) / kManifestFileName).string()
            << "\ncontent hash " << m.content_hash() << '\n';
  for (const auto& e : m.errors) std::cerr << "error: " << e.item << ": " << e.message << '\n';
  return m.complete ? 0 : 1;
}

int run_validate(const Args& a) {
  const fs::path mpath = manifest_file(a.manifest);
  const auto m = DatasetManifest::load(mpath);
  std::vector<Diagnostic> diagnostics;
  for (const auto& e : m.errors) {
    diagnostics.push_back({Diagnostic::Level::error, "generation_failed", e.item, -1, e.message});
  }
  if (!a.skip_files) {
    const auto files = verify_outputs(m, mpath.parent_path());
    diagnostics.insert(diagnostics.end(), files.begin(), files.end());
  }
  if (!a.log.empty()) {
    const auto d = validate_predictions(load_prediction_log(a.log), m);
    diagnostics.insert(diagnostics.end(), d.begin(), d.end());
  }
  return print_diagnostics(diagnostics);
}

int run_eval(const Args& a) {
  const auto m = DatasetManifest::load(manifest_file(a.manifest));
  const auto log = load_prediction_log(a.log);
  Labels labels;
  if (!a.labels.empty()) labels = load_labels(a.labels);
  if (m.type == DatasetType::corruption && a.labels.empty()) {
    throw ParameterError("corruption datasets need --labels");
  }
  EvalOptions opt;
  opt.stride = a.stride;
  opt.require_relative = a.relative;
  const auto rep = evaluate(m, log, labels, resolve_profile(a.baseline), opt);
  return emit_report(rep, a.format.empty() ? "json" : a.format, a.out, a.class_names);
}

int run_report(const Args& a) {
  const std::string text = read_text(a.report_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto rep = first != std::string::npos && text[first] == '{' ? parse_report_json(text) : parse_report_csv(text);
  return emit_report(rep, a.format.empty() ? "text" : a.format, a.out, a.class_names);
}

int run_predict(const Args& a) {
  const fs::path mpath = manifest_file(a.manifest);
  const auto m = DatasetManifest::load(mpath);
  PredictOptions o;
  o.classifier = parse_toy_classifier(a.classifier);
  o.topk = a.topk;
  o.n_classes = a.classes;
  o.model = a.model;
  o.jobs = a.jobs;
  const auto records = run_predictions(m, mpath.parent_path(), o);
  if (a.out.empty() || a.out == "-") {
    for (const auto& r : records) std::cout << format_prediction(r) << '\n';
  } else {
    save_prediction_log(a.out, records);
  }
  return 0;
}

int run_make_corpus(const Args& a) {
  if (a.count < 1 || a.size < kMinBenchmarkSide || a.classes < 1) {
    throw ParameterError("--count and --classes must be positive and --size at least 16");
  }
  const auto paths = write_synthetic_corpus(a.out, a.count, a.size, a.size, a.seed);
  std::ostringstream labels;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    labels << source_item_id(fs::relative(paths[i], a.out)) << '\t' << i % static_cast<std::size_t>(a.classes)
           << '\n';
  }
  const fs::path labels_path = a.labels.empty() ? fs::path(a.out) / "labels.tsv" : fs::path(a.labels);
  write_text(labels_path.string(), labels.str());
  std::cout << paths.size() << " images in " << a.out << ", labels " << labels_path.string() << '\n';
  return 0;
}

int run_profiles_list() {
  for (const auto& n : builtin_profile_names()) {
    const auto p = builtin_profile(n);
    std::cout << n << '\t' << p.hash() << '\n';
  }
  return 0;
}

int run_profiles_show(const Args& a) {
  std::cout << resolve_profile(a.profile).serialize();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corruption and perturbation robustness benchmark toolkit"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);
  Args a;

  auto schedule_opt = [&](CLI::App* c) {
    c->add_option("--schedule", a.schedule, "Severity schedule file (else $CORRUPTION_BENCH_SCHEDULE, else built-in)");
  };
  auto gen_common = [&](CLI::App* c) {
    c->add_option("src", a.src, "Source image directory")->required();
    c->add_option("out", a.out, "Output directory")->required();
    c->add_option("--seed", a.seed, "Root seed");
    c->add_option("--kinds", a.kinds, "Comma-separated kinds or groups (benchmark/common, validation, all)");
    c->add_option("--jobs", a.jobs, "Worker threads");
    c->add_option("--resolution", a.resolution, "native, 224 or 299");
    c->add_option("--baseline", a.baseline, "Baseline profile recorded in the manifest");
    schedule_opt(c);
  };

  auto* gen_c = app.add_subcommand("gen-c", "Generate a corruption dataset");
  gen_common(gen_c);
  gen_c->add_option("--severities", a.severities, "Comma-separated severities 1..5");
  gen_c->add_option("--format", a.format, "jpeg (default) or png");
  gen_c->add_option("--quality", a.quality, "JPEG quality");
  gen_c->add_flag("--no-clean", a.no_clean, "Omit clean-set records");

  auto* gen_p = app.add_subcommand("gen-p", "Generate a perturbation-sequence dataset");
  gen_common(gen_p);
  gen_p->add_option("--frames", a.frames, "Frames per sequence (>= 31)");
  gen_p->add_option("--difficulty", a.difficulty, "normal or hard");
  gen_p->add_option("--storage", a.storage, "frames or stack");
  gen_p->add_option("--fill", a.fill, "Geometric fill: clamp or black");

  auto* val = app.add_subcommand("validate", "Check a dataset's files and optionally a prediction log");
  val->add_option("manifest", a.manifest, "Manifest file or dataset directory")->required();
  val->add_option("--log", a.log, "Prediction log (JSON lines)");
  val->add_flag("--skip-files", a.skip_files, "Do not re-hash dataset files");

  auto* ev = app.add_subcommand("eval", "Score a prediction log");
  ev->add_option("manifest", a.manifest, "Manifest file or dataset directory")->required();
  ev->add_option("log", a.log, "Prediction log (JSON lines)")->required();
  ev->add_option("--labels", a.labels, "Labels file: id<TAB>class");
  ev->add_option("--baseline", a.baseline, "Baseline profile name or file");
  ev->add_option("--stride", a.stride, "Frame stride for temporal sequences (1 or 2)");
  ev->add_flag("--relative", a.relative, "Require relative CE (needs clean-set predictions)");
  ev->add_option("--format", a.format, "json (default), text, csv or plots");
  ev->add_option("--out", a.out, "Output file (directory for plots); stdout by default");
  ev->add_option("--class-names", a.class_names, "Class names file: class<TAB>name");

  auto* rep = app.add_subcommand("report", "Render a JSON or CSV report");
  rep->add_option("report", a.report_path, "Report file")->required();
  rep->add_option("--format", a.format, "text (default), csv, json or plots");
  rep->add_option("--out", a.out, "Output file (directory for plots); stdout by default");
  rep->add_option("--class-names", a.class_names, "Class names file: class<TAB>name");

  auto* prof = app.add_subcommand("profiles", "Baseline profiles");
  prof->require_subcommand(1);
  auto* prof_list = prof->add_subcommand("list", "List built-in profiles");
  auto* prof_show = prof->add_subcommand("show", "Print a profile");
  prof_show->add_option("name", a.profile, "Built-in name or file")->required();

  auto* pred = app.add_subcommand("predict", "Run a built-in classifier over a dataset");
  pred->add_option("manifest", a.manifest, "Manifest file or dataset directory")->required();
  pred->add_option("--out", a.out, "Log file; stdout by default");
  pred->add_option("--classifier", a.classifier, "constant, flip or pixel-hash");
  pred->add_option("--topk", a.topk, "Ranked classes per record");
  pred->add_option("--classes", a.classes, "Number of classes");
  pred->add_option("--model", a.model, "Model name written to the log");
  pred->add_option("--jobs", a.jobs, "Worker threads");

  auto* corpus = app.add_subcommand("make-corpus", "Write a synthetic source corpus with labels");
  corpus->add_option("out", a.out, "Output directory")->required();
  corpus->add_option("--count", a.count, "Number of images");
  corpus->add_option("--size", a.size, "Side length in pixels");
  corpus->add_option("--seed", a.seed, "Seed");
  corpus->add_option("--classes", a.classes, "Label classes (assigned round robin)");
  corpus->add_option("--labels", a.labels, "Labels file path (default <out>/labels.tsv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (gen_c->parsed()) return run_gen_c(a);
    if (gen_p->parsed()) return run_gen_p(a);
    if (val->parsed()) return run_validate(a);
    if (ev->parsed()) return run_eval(a);
    if (rep->parsed()) return run_report(a);
    if (prof_list->parsed()) return run_profiles_list();
    if (prof_show->parsed()) return run_profiles_show(a);
    if (pred->parsed()) return run_predict(a);
    if (corpus->parsed()) return run_make_corpus(a);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return 3;
}
