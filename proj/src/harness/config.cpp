// Copyright 2026 The Authors.
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
#include <set>
#include <sstream>

#include <json.hpp>

#include "matroidsum/cyclic_sets.hpp"
#include "matroidsum/harness.hpp"

namespace matroidsum::harness {
namespace {

const std::set<std::string, std::less<>> kFamilies{"uniform",     "direct_sum",        "gf2",   "gf3", "random_gf3",
                                                   "hand_listed", "parallel_class", "negative_controls", "pairs", "egz"};

bool has_family(const CampaignConfig& c, std::string_view name) {
  return std::find(c.families.begin(), c.families.end(), name) != c.families.end();
}

template <typename T>
T read(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config key '" + key + "': " + e.what());
  }
}

}  // namespace

std::string_view check_name(Check check) {
  switch (check) {
    case Check::Axioms: return "axioms";
    case Check::Chowla: return "chowla";
    case Check::Egz: return "egz";
    case Check::Lemma1: return "lemma1";
    case Check::Lemma2: return "lemma2";
    case Check::Main: return "main";
    case Check::Vosper: return "vosper";
  }
  return "?";
}

Check parse_check(std::string_view name) {
  for (auto c : {Check::Axioms, Check::Chowla, Check::Egz, Check::Lemma1, Check::Lemma2, Check::Main, Check::Vosper}) {
    if (check_name(c) == name) return c;
  }
  throw ConfigError("unknown check '" + std::string(name) + "'");
}

void CampaignConfig::validate() const {
  for (const auto& f : families) {
    if (!kFamilies.contains(f)) throw ConfigError("unknown catalog family '" + f + "'");
  }
  auto cap = [](const char* key, unsigned value, unsigned limit) {
    if (value > limit) {
      throw ConfigError(std::string(key) + " = " + std::to_string(value) + " exceeds cap " + std::to_string(limit));
    }
  };
  cap("uniform_max_ground", uniform_max_ground, kMaxGroundSize);
  cap("direct_sum_max_ground", direct_sum_max_ground, kMaxGroundSize);
  cap("gf2_max_cols", gf2_max_cols, 5);
  cap("gf2_max_rows", gf2_max_rows, 4);
  cap("gf3_max_cols", gf3_max_cols, 4);
  cap("gf3_max_rows", gf3_max_rows, 3);
  cap("random_gf3_cols", random_gf3_cols, kMaxGroundSize);
  cap("random_gf3_rows", random_gf3_rows, 8);
  cap("lemma1_max_ground", lemma1_max_ground, 8);
  for (auto n : moduli) {
    if (n < 1) throw ConfigError("moduli: 0 is not a valid modulus");
    cap("moduli", n, kMaxModulus);
  }
  for (auto n : pairs_moduli) {
    if (n < 1) throw ConfigError("pairs_moduli: 0 is not a valid modulus");
    cap("pairs_moduli", n, kMaxGroundSize / 2);
  }
  for (auto n : egz_moduli) {
    if (n < 1) throw ConfigError("egz_moduli: 0 is not a valid modulus");
    // U_n lives on 2n - 1 elements.
    cap("egz_moduli", n, (kMaxGroundSize + 1) / 2);
  }
  if (std::find(checks.begin(), checks.end(), Check::Axioms) != checks.end()) {
    throw ConfigError("'axioms' is implied by the negative_controls family and cannot be requested");
  }
  const bool sampling = weight_samples > 0 || egz_samples > 0 || (random_gf3_count > 0 && has_family(*this, "random_gf3"));
  if (sampling && !seed) throw ConfigError("a seed is required when random sampling is enabled");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

CampaignConfig parse_config(std::string_view json_text, bool validate) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  CampaignConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "families") c.families = read<std::vector<std::string>>(value, key);
    else if (key == "uniform_max_ground") c.uniform_max_ground = read<unsigned>(value, key);
    else if (key == "direct_sum_max_ground") c.direct_sum_max_ground = read<unsigned>(value, key);
    else if (key == "gf2_max_rows") c.gf2_max_rows = read<unsigned>(value, key);
    else if (key == "gf2_max_cols") c.gf2_max_cols = read<unsigned>(value, key);
    else if (key == "gf3_max_rows") c.gf3_max_rows = read<unsigned>(value, key);
    else if (key == "gf3_max_cols") c.gf3_max_cols = read<unsigned>(value, key);
    else if (key == "random_gf3_count") c.random_gf3_count = read<unsigned>(value, key);
    else if (key == "random_gf3_rows") c.random_gf3_rows = read<unsigned>(value, key);
    else if (key == "random_gf3_cols") c.random_gf3_cols = read<unsigned>(value, key);
    else if (key == "moduli") c.moduli = read<std::vector<unsigned>>(value, key);
    else if (key == "weight_samples") c.weight_samples = read<unsigned>(value, key);
    else if (key == "pollard_filter") c.pollard_filter = read<bool>(value, key);
    else if (key == "pairs_moduli") c.pairs_moduli = read<std::vector<unsigned>>(value, key);
    else if (key == "egz_moduli") c.egz_moduli = read<std::vector<unsigned>>(value, key);
    else if (key == "egz_samples") c.egz_samples = read<unsigned>(value, key);
    else if (key == "lemma1_max_ground") c.lemma1_max_ground = read<unsigned>(value, key);
    else if (key == "seed") c.seed = read<std::uint64_t>(value, key);
    else if (key == "jobs") c.jobs = read<unsigned>(value, key);
    else if (key == "out") c.out = read<std::string>(value, key);
    else if (key == "fault_inject") c.fault_inject = read<bool>(value, key);
    else if (key == "timing") c.timing = read<bool>(value, key);
    else if (key == "checks") {
      c.checks.clear();
      for (const auto& name : read<std::vector<std::string>>(value, key)) c.checks.push_back(parse_check(name));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (validate) c.validate();
  return c;
}

CampaignConfig load_config(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), validate);
}

}  // namespace matroidsum::harness
