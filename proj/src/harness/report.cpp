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

#include "cbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cbench/error.hpp"
#include "cbench/numeric_text.hpp"

namespace cbench {
namespace {

using json = nlohmann::ordered_json;
constexpr std::string_view kReportFormat = "cbench-report/1";

std::string pct(std::optional<double> v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", 100.0 * *v);
  return buf;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// text tables

struct Column {
  std::string group;
  std::string header;
  std::vector<std::string> cells;
};

std::string table(const std::vector<Column>& cols) {
  std::vector<std::size_t> width;
  for (const auto& c : cols) {
    std::size_t w = c.header.size();
    for (const auto& s : c.cells) w = std::max(w, s.size());
    width.push_back(w);
  }
  // widen the last column of a group whose label is longer than its span
  for (std::size_t i = 0; i < cols.size();) {
    std::size_t j = i;
    std::size_t span = 0;
    while (j < cols.size() && cols[j].group == cols[i].group) {
      span += width[j] + (j > i ? 2 : 0);
      ++j;
    }
    if (cols[i].group.size() > span) width[j - 1] += cols[i].group.size() - span;
    i = j;
  }
  const bool left_first = !cols.empty();
  auto cell = [&](std::size_t i, const std::string& s) {
    std::string pad(width[i] - s.size(), ' ');
    return (i == 0 && left_first) ? s + pad : pad + s;
  };
  std::ostringstream out;
  bool grouped = false;
  for (const auto& c : cols) grouped = grouped || !c.group.empty();
  if (grouped) {
    std::string line;
    for (std::size_t i = 0; i < cols.size();) {
      std::size_t j = i;
      std::size_t span = 0;
      while (j < cols.size() && cols[j].group == cols[i].group) {
        span += width[j] + (j > i ? 2 : 0);
        ++j;
      }
      line += (i ? "  " : "") + cols[i].group + std::string(span - cols[i].group.size(), ' ');
      i = j;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "  " : "") << cell(i, cols[i].header);
  out << '\n';
  const std::size_t rows = cols.empty() ? 0 : cols[0].cells.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "  " : "") << cell(i, cols[i].cells[r]);
    out << '\n';
  }
  return out.str();
}

void render_corruption_text(std::ostringstream& out, const RobustnessReport& r) {
  const bool relative = r.relative_mce.has_value() ||
                        std::any_of(r.corruptions.begin(), r.corruptions.end(),
                                    [](const auto& s) { return s.relative_ce.has_value(); });
  std::vector<Column> cols;
  cols.push_back({"", "Network", {r.model}});
  cols.push_back({"", "Error", {pct(r.clean_error)}});
  cols.push_back({"", "mCE", {pct(r.mce)}});
  if (relative) {
    cols[0].cells.push_back(r.model + " (relative)");
    cols[1].cells.push_back("");
    cols[2].cells.push_back(pct(r.relative_mce));
  }
  std::vector<Column> held_out;
  held_out.push_back({"", "Network", cols[0].cells});
  for (const auto& s : r.corruptions) {
    Column c{std::string(name(category(s.kind))), std::string(short_label(s.kind)), {pct(s.ce)}};
    if (relative) c.cells.push_back(pct(s.relative_ce));
    if (is_benchmark(s.kind)) {
      cols.push_back(std::move(c));
    } else {
      c.group.clear();
      held_out.push_back(std::move(c));
    }
  }
  out << "Corruption Error (%)\n" << table(cols);
  if (held_out.size() > 1) out << "\nValidation corruptions, CE (%), not part of mCE\n" << table(held_out);

  std::vector<Column> sev{{"", "Kind", {}}};
  for (int s = 1; s <= kSeverityLevels; ++s) sev.push_back({"", "s" + std::to_string(s), {}});
  for (const auto& s : r.corruptions) {
    sev[0].cells.emplace_back(name(s.kind));
    for (std::size_t i = 0; i < s.error.size(); ++i) sev[i + 1].cells.push_back(pct(s.error[i]));
  }
  out << "\nTop-1 error by severity (%)\n" << table(sev);
}

void render_perturbation_text(std::ostringstream& out, const RobustnessReport& r) {
  auto summary = [&](const char* title, const char* agg, std::optional<double> mean,
                     double PerturbationScores::*field) {
    std::vector<Column> cols{{"", "Network", {r.model}}, {"", agg, {pct(mean)}}};
    std::vector<Column> held{{"", "Network", {r.model}}};
    for (const auto& s : r.perturbations) {
      Column c{std::string(name(category(s.kind))), std::string(short_label(s.kind)), {pct(s.*field)}};
      if (is_common(s.kind)) {
        cols.push_back(std::move(c));
      } else {
        c.group.clear();
        held.push_back(std::move(c));
      }
    }
    out << title << '\n' << table(cols);
    if (held.size() > 1) out << "\nValidation perturbations, not part of " << agg << "\n" << table(held);
    out << '\n';
  };
  summary("Flip Rate (%)", "mFR", r.mfr, &PerturbationScores::fr);
  summary("Top-5 Distance (%)", "mT5D", r.mt5d, &PerturbationScores::t5d);

  std::vector<Column> raw{{"", "Kind", {}}, {"", "Pairs", {}}, {"", "FP (%)", {}}, {"", "uT5D", {}}};
  for (const auto& s : r.perturbations) {
    raw[0].cells.emplace_back(name(s.kind));
    raw[1].cells.push_back(std::to_string(s.pairs));
    raw[2].cells.push_back(pct(s.fp));
    raw[3].cells.push_back(fixed2(s.ut5d));
  }
  out << "Raw stability\n" << table(raw);
}

// ---------------------------------------------------------------------------
// json

json opt(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

std::optional<double> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number()) throw FormatError(std::string("report: '") + key + "' must be a number");
  return j[key].get<double>();
}

template <class T>
T need(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("report: missing '") + key + "'");
  try {
    return j[key].get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("report: '") + key + "' has the wrong type");
  }
}

// ---------------------------------------------------------------------------
// csv

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw FormatError("report csv: unterminated quote");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

double csv_number(const std::string& s) {
  try {
    return parse_double(s, "report csv value");
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

std::size_t csv_count(const std::string& s) {
  const double v = csv_number(s);
  if (!(v >= 0.0) || v != std::floor(v)) throw FormatError("report csv: expected a count, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// svg

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string svg_bars(const std::string& title, const std::vector<std::pair<std::string, double>>& bars) {
  const int bar_w = 36;
  const int gap = 10;
  const int left = 50;
  const int top = 40;
  const int plot_h = 240;
  const int width = left + static_cast<int>(bars.size()) * (bar_w + gap) + 20;
  const int height = top + plot_h + 90;
  double vmax = 100.0;
  for (const auto& b : bars) vmax = std::max(vmax, b.second);
  vmax = std::ceil(vmax / 20.0) * 20.0;
  auto y_of = [&](double v) { return top + plot_h - v / vmax * plot_h; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  for (double v = 0.0; v <= vmax + 1e-9; v += 20.0) {
    s << "<line x1=\"" << left << "\" x2=\"" << width - 10 << "\" y1=\"" << fixed2(y_of(v)) << "\" y2=\""
      << fixed2(y_of(v)) << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << left - 6 << "\" y=\"" << fixed2(y_of(v) + 4) << "\" text-anchor=\"end\">" << v
      << "</text>\n";
  }
  s << "<line x1=\"" << left << "\" x2=\"" << width - 10 << "\" y1=\"" << fixed2(y_of(100.0)) << "\" y2=\""
    << fixed2(y_of(100.0)) << "\" stroke=\"#c33\" stroke-dasharray=\"4 3\"/>\n";
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double x = left + gap / 2.0 + static_cast<double>(i) * (bar_w + gap);
    const double y = y_of(bars[i].second);
    s << "<rect x=\"" << fixed2(x) << "\" y=\"" << fixed2(y) << "\" width=\"" << bar_w << "\" height=\""
      << fixed2(top + plot_h - y) << "\" fill=\"#4a78b0\"/>\n";
    s << "<text x=\"" << fixed2(x + bar_w / 2.0) << "\" y=\"" << fixed2(y - 3)
      << "\" text-anchor=\"middle\" font-size=\"9\">" << pct(bars[i].second / 100.0) << "</text>\n";
    const double lx = x + bar_w / 2.0;
    const double ly = top + plot_h + 12;
    s << "<text x=\"" << fixed2(lx) << "\" y=\"" << fixed2(ly) << "\" text-anchor=\"end\" transform=\"rotate(-45 "
      << fixed2(lx) << " " << fixed2(ly) << ")\">" << bars[i].first << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "csv") return ReportFormat::csv;
  if (s == "json") return ReportFormat::json;
  if (s == "plots") return ReportFormat::plots;
  throw ParameterError("unknown report format '" + std::string(s) + "' (text, csv, json, plots)");
}

std::string render_text(const RobustnessReport& r, const ClassNames* names) {
  std::ostringstream out;
  out << "Model: " << r.model << "\nBaseline: " << r.baseline << " (" << r.baseline_hash.substr(0, 12) << ")"
      << "\nDataset: " << name(r.dataset) << " (" << r.manifest_hash.substr(0, 12) << ")";
  if (r.dataset == DatasetType::perturbation) {
    out << "\nDifficulty: " << name(r.difficulty) << ", stride " << r.stride;
  }
  out << "\nComplete: " << (r.complete ? "yes" : "no (aggregates cover the kinds present)") << "\n\n";
  if (r.dataset == DatasetType::corruption) {
    render_corruption_text(out, r);
  } else {
    render_perturbation_text(out, r);
  }
  if (!r.classes.empty()) {
    std::vector<std::pair<ClassId, ClassTally>> worst(r.classes.begin(), r.classes.end());
    std::stable_sort(worst.begin(), worst.end(), [](const auto& a, const auto& b) {
      return a.second.wrong * b.second.total > b.second.wrong * a.second.total;
    });
    if (worst.size() > 10) worst.resize(10);
    std::vector<Column> cols{{"", "Class", {}}, {"", "Error (%)", {}}, {"", "Items", {}}};
    for (const auto& [cls, t] : worst) {
      std::string label = std::to_string(cls);
      if (names) {
        const auto it = names->find(cls);
        if (it != names->end()) label += " " + it->second;
      }
      cols[0].cells.push_back(label);
      cols[1].cells.push_back(pct(static_cast<double>(t.wrong) / static_cast<double>(t.total)));
      cols[2].cells.push_back(std::to_string(t.total));
    }
    out << "\nHighest corrupted-set error by class\n" << table(cols);
  }
  return out.str();
}

std::string render_json(const RobustnessReport& r) {
  json j;
  j["format"] = kReportFormat;
  j["dataset"] = name(r.dataset);
  j["model"] = r.model;
  j["manifest_hash"] = r.manifest_hash;
  j["baseline"] = r.baseline;
  j["baseline_hash"] = r.baseline_hash;
  j["difficulty"] = name(r.difficulty);
  j["stride"] = r.stride;
  j["complete"] = r.complete;
  j["clean_error"] = opt(r.clean_error);
  j["mce"] = opt(r.mce);
  j["relative_mce"] = opt(r.relative_mce);
  j["mfr"] = opt(r.mfr);
  j["mt5d"] = opt(r.mt5d);
  json cs = json::array();
  for (const auto& s : r.corruptions) {
    json e = json::array();
    for (const auto& v : s.error) e.push_back(opt(v));
    cs.push_back({{"kind", name(s.kind)}, {"error", e}, {"ce", opt(s.ce)}, {"relative_ce", opt(s.relative_ce)}});
  }
  j["corruptions"] = cs;
  json ps = json::array();
  for (const auto& s : r.perturbations) {
    ps.push_back({{"kind", name(s.kind)},
                  {"pairs", s.pairs},
                  {"fp", s.fp},
                  {"ut5d", s.ut5d},
                  {"fr", s.fr},
                  {"t5d", s.t5d}});
  }
  j["perturbations"] = ps;
  json cls = json::array();
  for (const auto& [c, t] : r.classes) cls.push_back({{"class", c}, {"wrong", t.wrong}, {"total", t.total}});
  j["classes"] = cls;
  return j.dump(2) + "\n";
}

RobustnessReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || need<std::string>(j, "format") != kReportFormat) throw FormatError("not a cbench report");
  RobustnessReport r;
  r.dataset = parse_dataset_type(need<std::string>(j, "dataset"));
  r.model = need<std::string>(j, "model");
  r.manifest_hash = need<std::string>(j, "manifest_hash");
  r.baseline = need<std::string>(j, "baseline");
  r.baseline_hash = need<std::string>(j, "baseline_hash");
  r.difficulty = parse_difficulty(need<std::string>(j, "difficulty"));
  r.stride = need<int>(j, "stride");
  r.complete = need<bool>(j, "complete");
  r.clean_error = get_opt(j, "clean_error");
  r.mce = get_opt(j, "mce");
  r.relative_mce = get_opt(j, "relative_mce");
  r.mfr = get_opt(j, "mfr");
  r.mt5d = get_opt(j, "mt5d");
  for (const auto& c : need<json>(j, "corruptions")) {
    CorruptionScores s{parse_corruption_kind(need<std::string>(c, "kind")), {}, get_opt(c, "ce"),
                       get_opt(c, "relative_ce")};
    const auto e = need<json>(c, "error");
    if (!e.is_array() || e.size() != kSeverityLevels) throw FormatError("report: error needs five entries");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i].is_null()) s.error[i] = e[i].get<double>();
    }
    r.corruptions.push_back(s);
  }
  for (const auto& p : need<json>(j, "perturbations")) {
    r.perturbations.push_back({parse_perturbation_kind(need<std::string>(p, "kind")), need<std::size_t>(p, "pairs"),
                               need<double>(p, "fp"), need<double>(p, "ut5d"), need<double>(p, "fr"),
                               need<double>(p, "t5d")});
  }
  for (const auto& c : need<json>(j, "classes")) {
    r.classes[need<ClassId>(c, "class")] = {need<std::size_t>(c, "wrong"), need<std::size_t>(c, "total")};
  }
  return r;
}

std::string render_csv(const RobustnessReport& r) {
  std::ostringstream out;
  out << "field,kind,index,value\n";
  auto meta = [&](const char* field, const std::string& v) { out << field << ",,," << csv_quote(v) << '\n'; };
  auto num = [&](const std::string& field, std::string_view kind, const std::string& index, double v) {
    out << field << ',' << kind << ',' << index << ',' << g17(v) << '\n';
  };
  auto optnum = [&](const char* field, std::optional<double> v) {
    if (v) num(field, "", "", *v);
  };
  meta("format", std::string(kReportFormat));
  meta("dataset", std::string(name(r.dataset)));
  meta("model", r.model);
  meta("manifest_hash", r.manifest_hash);
  meta("baseline", r.baseline);
  meta("baseline_hash", r.baseline_hash);
  meta("difficulty", std::string(name(r.difficulty)));
  meta("stride", std::to_string(r.stride));
  meta("complete", r.complete ? "true" : "false");
  optnum("clean_error", r.clean_error);
  optnum("mce", r.mce);
  optnum("relative_mce", r.relative_mce);
  optnum("mfr", r.mfr);
  optnum("mt5d", r.mt5d);
  for (const auto& s : r.corruptions) {
    // the kind row keeps kinds without any value in the round trip
    out << "corruption," << name(s.kind) << ",,\n";
    for (std::size_t i = 0; i < s.error.size(); ++i) {
      if (s.error[i]) num("error", name(s.kind), std::to_string(i + 1), *s.error[i]);
    }
    if (s.ce) num("ce", name(s.kind), "", *s.ce);
    if (s.relative_ce) num("relative_ce", name(s.kind), "", *s.relative_ce);
  }
  for (const auto& s : r.perturbations) {
    out << "perturbation," << name(s.kind) << ",,\n";
    num("pairs", name(s.kind), "", static_cast<double>(s.pairs));
    num("fp", name(s.kind), "", s.fp);
    num("ut5d", name(s.kind), "", s.ut5d);
    num("fr", name(s.kind), "", s.fr);
    num("t5d", name(s.kind), "", s.t5d);
  }
  for (const auto& [c, t] : r.classes) {
    num("class_wrong", "", std::to_string(c), static_cast<double>(t.wrong));
    num("class_total", "", std::to_string(c), static_cast<double>(t.total));
  }
  return out.str();
}

RobustnessReport parse_report_csv(std::string_view text) {
  const auto rows = csv_rows(text);
  if (rows.empty() || rows[0] != std::vector<std::string>{"field", "kind", "index", "value"}) {
    throw FormatError("report csv: missing header 'field,kind,index,value'");
  }
  RobustnessReport r;
  auto corruption = [&](const std::string& k) -> CorruptionScores& {
    const auto kind = parse_corruption_kind(k);
    for (auto& s : r.corruptions) {
      if (s.kind == kind) return s;
    }
    throw FormatError("report csv: corruption " + k + " used before its kind row");
  };
  auto perturbation = [&](const std::string& k) -> PerturbationScores& {
    const auto kind = parse_perturbation_kind(k);
    for (auto& s : r.perturbations) {
      if (s.kind == kind) return s;
    }
    throw FormatError("report csv: perturbation " + k + " used before its kind row");
  };
  auto class_id = [](const std::string& s) { return static_cast<ClassId>(csv_count(s)); };
  bool format_seen = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != 4) throw FormatError("report csv: line " + std::to_string(i + 1) + " needs 4 fields");
    const auto& [f, k, idx, v] = std::tie(row[0], row[1], row[2], row[3]);
    if (f == "format") {
      if (v != kReportFormat) throw FormatError("not a cbench report");
      format_seen = true;
    } else if (f == "dataset") {
      r.dataset = parse_dataset_type(v);
    } else if (f == "model") {
      r.model = v;
    } else if (f == "manifest_hash") {
      r.manifest_hash = v;
    } else if (f == "baseline") {
      r.baseline = v;
    } else if (f == "baseline_hash") {
      r.baseline_hash = v;
    } else if (f == "difficulty") {
      r.difficulty = parse_difficulty(v);
    } else if (f == "stride") {
      r.stride = static_cast<int>(csv_count(v));
    } else if (f == "complete") {
      r.complete = v == "true";
    } else if (f == "clean_error") {
      r.clean_error = csv_number(v);
    } else if (f == "mce") {
      r.mce = csv_number(v);
    } else if (f == "relative_mce") {
      r.relative_mce = csv_number(v);
    } else if (f == "mfr") {
      r.mfr = csv_number(v);
    } else if (f == "mt5d") {
      r.mt5d = csv_number(v);
    } else if (f == "corruption") {
      r.corruptions.push_back({parse_corruption_kind(k), {}, std::nullopt, std::nullopt});
    } else if (f == "error") {
      const auto s = csv_count(idx);
      if (s < 1 || s > kSeverityLevels) throw FormatError("report csv: severity out of range");
      corruption(k).error[s - 1] = csv_number(v);
    } else if (f == "ce") {
      corruption(k).ce = csv_number(v);
    } else if (f == "relative_ce") {
      corruption(k).relative_ce = csv_number(v);
    } else if (f == "perturbation") {
      r.perturbations.push_back({parse_perturbation_kind(k)});
    } else if (f == "pairs") {
      perturbation(k).pairs = csv_count(v);
    } else if (f == "fp") {
      perturbation(k).fp = csv_number(v);
    } else if (f == "ut5d") {
      perturbation(k).ut5d = csv_number(v);
    } else if (f == "fr") {
      perturbation(k).fr = csv_number(v);
    } else if (f == "t5d") {
      perturbation(k).t5d = csv_number(v);
    } else if (f == "class_wrong") {
      r.classes[class_id(idx)].wrong = csv_count(v);
    } else if (f == "class_total") {
      r.classes[class_id(idx)].total = csv_count(v);
    } else {
      throw FormatError("report csv: unknown field '" + f + "'");
    }
  }
  if (!format_seen) throw FormatError("not a cbench report");
  return r;
}

std::vector<std::pair<std::string, std::string>> render_plots(const RobustnessReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  auto chart = [&](const std::string& file, const std::string& title, auto&& rows, auto&& value) {
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& s : rows) {
      if (const auto v = value(s)) bars.emplace_back(std::string(short_label(s.kind)), 100.0 * *v);
    }
    if (!bars.empty()) out.emplace_back(file, svg_bars(title + " - " + r.model, bars));
  };
  if (r.dataset == DatasetType::corruption) {
    chart("ce.svg", "Corruption Error (%)", r.corruptions, [](const CorruptionScores& s) { return s.ce; });
    chart("relative_ce.svg", "Relative Corruption Error (%)", r.corruptions,
          [](const CorruptionScores& s) { return s.relative_ce; });
  } else {
    chart("fr.svg", "Flip Rate (%)", r.perturbations,
          [](const PerturbationScores& s) { return std::optional<double>(s.fr); });
    chart("t5d.svg", "Top-5 Distance (%)", r.perturbations,
          [](const PerturbationScores& s) { return std::optional<double>(s.t5d); });
  }
  return out;
}

}  // namespace cbench
