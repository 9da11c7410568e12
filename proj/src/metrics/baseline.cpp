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

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cbench/error.hpp"
#include "cbench/hash.hpp"
#include "cbench/metrics.hpp"
#include "cbench/numeric_text.hpp"

namespace cbench {
namespace {

namespace pt = boost::property_tree;

// Mean top-1 error over severities 1..5 per corruption, in kind order.
constexpr double kAlexNetCorruption[kCorruptionKindCount] = {
    0.886, 0.894, 0.923, 0.820, 0.826, 0.786, 0.798, 0.867, 0.827, 0.819,
    0.565, 0.853, 0.646, 0.718, 0.607, 0.845, 0.787, 0.718, 0.658};
// Flip probability and unstandardized top-5 distance per perturbation.
constexpr double kAlexNetFp[kPerturbationKindCount] = {
    0.2365, 0.3006, 0.0930, 0.0594, 0.1193, 0.0489, 0.1101,
    0.1310, 0.0705, 0.2353, 0.1865, 0.0278, 0.0505, 0.1066};
constexpr double kAlexNetUt5d[kPerturbationKindCount] = {
    4.77, 5.76, 1.93, 1.34, 2.42, 1.19, 2.63, 2.95, 1.75, 4.48, 3.89, 0.70, 1.26, 2.48};
constexpr double kAlexNetClean = 0.435;

BaselineProfile make_profile(std::string name, double clean, const double* corruption, const double* fp,
                             const double* ut) {
  BaselineProfile p;
  p.name = std::move(name);
  p.clean_error = clean;
  for (auto k : all_corruption_kinds()) p.corruption_denoms[k] = corruption[static_cast<std::size_t>(k)];
  for (auto k : all_perturbation_kinds()) {
    p.fp_denoms[k] = fp[static_cast<std::size_t>(k)];
    p.ut5d_denoms[k] = ut[static_cast<std::size_t>(k)];
  }
  return p;
}

template <class Kind, class Find>
void read_section(const pt::ptree& body, const std::string& section, Find find, std::map<Kind, double>& out) {
  for (const auto& [key, node] : body) {
    const auto kind = find(key);
    if (!kind) throw ParameterError("profile [" + section + "]: unknown kind '" + key + "'");
    out[*kind] = parse_double(node.data(), "profile [" + section + "] " + key);
  }
}

template <class Kind>
double lookup(const std::map<Kind, double>& m, Kind kind, const std::string& profile, const char* what) {
  const auto it = m.find(kind);
  if (it == m.end()) {
    throw ParameterError("baseline '" + profile + "' has no " + what + " for " + std::string(name(kind)));
  }
  if (!(it->second > 0.0)) {
    throw UndefinedMeasureError("baseline '" + profile + "' " + what + " for " + std::string(name(kind)) +
                                " is not positive");
  }
  return it->second;
}

}  // namespace

BaselineProfile BaselineProfile::parse(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParameterError("profile: line " + std::to_string(e.line()) + ": " + e.message());
  }
  BaselineProfile p;
  bool have_clean = false;
  for (const auto& [section, body] : tree) {
    if (section == "profile") {
      for (const auto& [key, node] : body) {
        if (key == "name") {
          p.name = node.data();
        } else if (key == "clean_error") {
          p.clean_error = parse_double(node.data(), "profile [profile] clean_error");
          have_clean = true;
        } else {
          throw ParameterError("profile [profile]: unknown key '" + key + "'");
        }
      }
    } else if (section == "corruption_denoms") {
      read_section(body, section, find_corruption_kind, p.corruption_denoms);
    } else if (section == "fp_denoms") {
      read_section(body, section, find_perturbation_kind, p.fp_denoms);
    } else if (section == "ut5d_denoms") {
      read_section(body, section, find_perturbation_kind, p.ut5d_denoms);
    } else {
      throw ParameterError("profile: unknown section [" + section + "]");
    }
  }
  if (p.name.empty()) throw ParameterError("profile: [profile] name is required");
  if (!have_clean) throw ParameterError("profile: [profile] clean_error is required");
  p.validate();
  return p;
}

BaselineProfile BaselineProfile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read profile " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string BaselineProfile::serialize() const {
  std::ostringstream out;
  out << "[profile]\nname = " << name << "\nclean_error = " << format_double(clean_error) << "\n";
  out << "\n[corruption_denoms]\n";
  for (const auto& [k, v] : corruption_denoms) out << cbench::name(k) << " = " << format_double(v) << "\n";
  out << "\n[fp_denoms]\n";
  for (const auto& [k, v] : fp_denoms) out << cbench::name(k) << " = " << format_double(v) << "\n";
  out << "\n[ut5d_denoms]\n";
  for (const auto& [k, v] : ut5d_denoms) out << cbench::name(k) << " = " << format_double(v) << "\n";
  return out.str();
}

std::string BaselineProfile::hash() const { return sha256_hex(serialize()); }

void BaselineProfile::validate() const {
  if (!(clean_error >= 0.0 && clean_error <= 1.0)) {
    throw ParameterError("profile '" + name + "': clean_error outside [0, 1]");
  }
  auto check = [&](const auto& m, const char* section) {
    for (const auto& [k, v] : m) {
      if (!(v > 0.0)) {
        throw ParameterError("profile '" + name + "' [" + section + "] " + std::string(cbench::name(k)) +
                             ": denominators must be positive");
      }
    }
  };
  check(corruption_denoms, "corruption_denoms");
  check(fp_denoms, "fp_denoms");
  check(ut5d_denoms, "ut5d_denoms");
}

double BaselineProfile::corruption_denom(CorruptionKind kind) const {
  return lookup(corruption_denoms, kind, name, "corruption error");
}
double BaselineProfile::fp_denom(PerturbationKind kind) const { return lookup(fp_denoms, kind, name, "FP"); }
double BaselineProfile::ut5d_denom(PerturbationKind kind) const {
  return lookup(ut5d_denoms, kind, name, "uT5D");
}

std::vector<std::string> builtin_profile_names() { return {"alexnet-paper", "unit"}; }

BaselineProfile builtin_profile(std::string_view n) {
  if (n == "alexnet-paper") {
    return make_profile("alexnet-paper", kAlexNetClean, kAlexNetCorruption, kAlexNetFp, kAlexNetUt5d);
  }
  if (n == "unit") {
    static constexpr double ones[kCorruptionKindCount] = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                                                          1, 1, 1, 1, 1, 1, 1, 1, 1};
    return make_profile("unit", 0.0, ones, ones, ones);
  }
  throw ParameterError("unknown baseline profile '" + std::string(n) + "'");
}

BaselineProfile resolve_profile(const std::string& name_or_path) {
  for (const auto& n : builtin_profile_names()) {
    if (n == name_or_path) return builtin_profile(n);
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw ParameterError("'" + name_or_path + "' is neither a built-in profile nor a file");
  }
  return BaselineProfile::load(name_or_path);
}

}  // namespace cbench
