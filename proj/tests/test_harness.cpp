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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "matroidsum/harness.hpp"
#include "test_support.hpp"

using namespace matroidsum;
namespace h = matroidsum::harness;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("matroidsum_test_" + name);
}

h::CampaignConfig small_config() {
  h::CampaignConfig c;
  c.families = {"uniform", "direct_sum", "hand_listed", "negative_controls"};
  c.uniform_max_ground = 4;
  c.direct_sum_max_ground = 4;
  c.moduli = {2, 3, 4};
  return c;
}

}  // namespace

TEST_CASE("matroid spec strings") {
  CHECK(h::parse_matroid_spec("uniform:4:2") == Matroid::uniform(4, 2));
  CHECK(h::parse_matroid_spec("sum:2:1:3:2") == Matroid::direct_sum(Matroid::uniform(2, 1), Matroid::uniform(3, 2)));
  CHECK(h::parse_matroid_spec("gf:2:(1,0)(0,1)(1,1)") == Matroid::uniform(3, 2));
  CHECK(h::parse_matroid_spec("bases:3:{}") == Matroid::uniform(3, 0));
  const auto pc = h::parse_matroid_spec("bases:4:{0,1}{0,2}{0,3}");
  CHECK(pc.bases().size() == 3);

  CHECK(h::uniform_spec(5, 3) == "uniform:5:3");
  CHECK(h::sum_spec(1, 1, 2, 0) == "sum:1:1:2:0");
  CHECK(h::matrix_spec(3, {{1, 2}, {0, 1}}) == "gf:3:(1,2)(0,1)");
  const std::vector<Mask> masks{0b011, 0b101};
  CHECK(h::bases_spec(3, masks) == "bases:3:{0,1}{0,2}");

  for (const char* bad : {"", "uniform:3", "uniform:3:4", "sum:1:1:1", "gf:4:(1)", "gf:2:(1)(1,0)", "bases:3:{0,3}",
                          "bases:x:{0}", "nope:1:1", "uniform:3:1:"}) {
    CAPTURE(bad);
    CHECK_THROWS(h::parse_matroid_spec(bad));
  }
  CHECK_THROWS_AS(h::parse_matroid_spec("bases:5:{1,2}{3,4}"), AxiomError);
  for (const auto& spec : h::negative_control_specs()) CHECK_THROWS_AS(h::parse_matroid_spec(spec), AxiomError);
}

TEST_CASE("instance ids") {
  const std::vector<unsigned> w{0, 0, 1, 3};
  CHECK(h::canonical_text("bases:4:{0,1}{0,2}{0,3}", 7, w) == "bases:4:{0,1}{0,2}{0,3}|Z7|w=0,0,1,3");
  CHECK(h::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(h::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  const auto id = h::instance_id("uniform:3:2", 2, std::vector<unsigned>{0, 0, 1});
  CHECK(id.size() == 16);
  CHECK(id == h::instance_id("uniform:3:2", 2, std::vector<unsigned>{0, 0, 1}));
  CHECK(id != h::instance_id("uniform:3:2", 2, std::vector<unsigned>{0, 1, 0}));
  CHECK(id != h::instance_id("uniform:3:2", 3, std::vector<unsigned>{0, 0, 1}));
}

TEST_CASE("SampleRng") {
  h::SampleRng a(42, "unit");
  h::SampleRng b(42, "unit");
  h::SampleRng c(42, "other");
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
    differs |= x != c.below(7);
  }
  CHECK(differs);
  h::SampleRng d(1);
  for (int i = 0; i < 20; ++i) CHECK(d.below(1) == 0);
}

TEST_CASE("uniform catalog size matches direct enumeration") {
  h::CampaignConfig c;
  c.families = {"uniform"};
  c.uniform_max_ground = 3;
  c.moduli = {2};
  const auto catalog = h::build_catalog(c);
  // Pairs 1 <= r <= m <= 3, times 2^m weight maps.
  std::size_t expected = 0;
  for (unsigned m = 1; m <= 3; ++m) expected += m * (1U << m);
  CHECK(catalog.size() == expected);
  std::set<std::string> ids;
  for (const auto& d : catalog) ids.insert(d.id);
  CHECK(ids.size() == catalog.size());
}

TEST_CASE("Pollard filter on composite moduli") {
  h::CampaignConfig c;
  c.families = {"uniform"};
  c.uniform_max_ground = 2;
  c.moduli = {4};
  const auto filtered = h::build_catalog(c);
  std::size_t expected = 0;
  for (unsigned m = 1; m <= 2; ++m) {
    const std::uint32_t total = 1U << (2 * m);
    for (std::uint32_t code = 0; code < total; ++code) {
      oracle::Set image;
      for (unsigned i = 0; i < m; ++i) image.insert(static_cast<int>((code >> (2 * i)) & 3));
      bool ok = true;
      for (int x : image) {
        for (int y : image) ok &= x == y || oracle::generates(4, oracle::mod(x - y, 4));
      }
      if (ok) expected += m;  // one instance per rank 1..m
    }
  }
  CHECK(filtered.size() == expected);
  c.pollard_filter = false;
  CHECK(h::build_catalog(c).size() == 1 * 4 + 2 * 16);
}

TEST_CASE("catalog determinism and edge cases") {
  const auto c = small_config();
  CHECK(h::build_catalog(c) == h::build_catalog(c));

  h::CampaignConfig empty;
  CHECK(h::build_catalog(empty).empty());

  h::CampaignConfig sampled;
  sampled.families = {"uniform"};
  sampled.uniform_max_ground = 4;
  sampled.weight_samples = 5;
  CHECK_THROWS_AS(h::build_catalog(sampled), h::ConfigError);
  sampled.seed = 9;
  const auto first = h::build_catalog(sampled);
  CHECK(first == h::build_catalog(sampled));
  sampled.seed = 10;
  CHECK(first != h::build_catalog(sampled));

  h::CampaignConfig pairs;
  pairs.families = {"pairs"};
  pairs.pairs_moduli = {3};
  CHECK(h::build_catalog(pairs).size() == 49);

  h::CampaignConfig egz;
  egz.families = {"egz"};
  egz.egz_moduli = {2, 3};
  CHECK(h::build_catalog(egz).size() == 8 + 243);
}

TEST_CASE("config parsing") {
  const auto c = h::parse_config(R"({"families": ["uniform"], "moduli": [2, 5], "checks": ["main"], "seed": 7})");
  CHECK(c.families == std::vector<std::string>{"uniform"});
  CHECK(c.moduli == std::vector<unsigned>{2, 5});
  CHECK(c.checks == std::vector<h::Check>{h::Check::Main});
  CHECK(*c.seed == 7);

  for (const char* bad : {"[]", "{", R"({"famlies": []})", R"({"families": ["nope"]})", R"({"moduli": [0]})",
                          R"({"moduli": [65]})", R"({"checks": ["axioms"]})", R"({"checks": ["bogus"]})",
                          R"({"gf2_max_cols": 9})", R"({"jobs": 0})", R"({"uniform_max_ground": "five"})",
                          R"({"families": ["egz"], "egz_moduli": [3], "egz_samples": 10})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(h::parse_config(bad), h::ConfigError);
  }
  CHECK_THROWS_AS(h::load_config("/nonexistent/config.json"), h::ConfigError);

  // Deferred validation lets a seed be supplied afterwards.
  auto deferred = h::parse_config(R"({"families": ["egz"], "egz_moduli": [3], "egz_samples": 10})", false);
  CHECK_THROWS_AS(deferred.validate(), h::ConfigError);
  deferred.seed = 1;
  CHECK_NOTHROW(deferred.validate());
  CHECK_THROWS_AS(h::parse_config(R"({"famlies": []})", false), h::ConfigError);
}

TEST_CASE("report records") {
  h::ReportRecord r;
  r.id = "00000000000000ff";
  r.check = h::Check::Main;
  r.bound = 3;
  r.weight_count = 3;
  r.inequality = true;
  r.equality = true;
  r.case_i = false;
  r.case_ii = true;
  CHECK(r.to_json() ==
        R"({"id":"00000000000000ff","check":"main","bound":3,"weight_count":3,"inequality":true,)"
        R"("equality":true,"case_i":false,"case_ii":true,"status":"pass","us":0})");

  h::ReportRecord skipped;
  skipped.id = "0";
  skipped.check = h::Check::Lemma1;
  skipped.status = h::Status::Skipped;
  CHECK(skipped.to_json() ==
        R"({"id":"0","check":"lemma1","bound":null,"weight_count":null,"inequality":null,)"
        R"("equality":null,"case_i":null,"case_ii":null,"status":"skipped","us":0})");

  CHECK(h::record_order(skipped, r));
  h::ReportRecord same = r;
  same.check = h::Check::Lemma2;
  CHECK(h::record_order(same, r));
}

TEST_CASE("evaluate_instance on the parallel-class example") {
  const std::string spec = "bases:4:{0,1}{0,2}{0,3}";
  const auto m = h::parse_matroid_spec(spec);
  const std::vector<unsigned> w{0, 0, 1, 3};
  const std::vector<h::Check> checks{h::Check::Main, h::Check::Lemma1, h::Check::Lemma2, h::Check::Egz};
  const auto records = h::evaluate_instance({spec, m, 7, w}, {checks});
  REQUIRE(records.size() == 4);
  CHECK(records[0].id == h::instance_id(spec, 7, w));
  CHECK(records[0].bound == 3);
  CHECK(records[0].weight_count == 3);
  CHECK(records[0].equality == true);
  CHECK(records[0].case_i == false);
  CHECK(records[0].case_ii == true);
  CHECK(records[0].status == h::Status::Pass);
  CHECK(records[1].status == h::Status::Pass);
  CHECK(records[2].status == h::Status::Pass);
  CHECK(records[3].status == h::Status::Skipped);

  const auto faulty = h::evaluate_instance({spec, m, 7, w}, {checks, true});
  CHECK(faulty[0].status == h::Status::Fail);
}

TEST_CASE("campaign reports are byte-identical across runs and job counts") {
  auto c = small_config();
  c.families.push_back("pairs");
  c.pairs_moduli = {4};
  c.checks = {h::Check::Main, h::Check::Lemma1, h::Check::Lemma2, h::Check::Chowla, h::Check::Vosper};
  const auto a = temp_path("a.jsonl");
  const auto b = temp_path("b.jsonl");
  c.out = a.string();
  c.jobs = 1;
  const auto s1 = h::run_campaign(c);
  c.out = b.string();
  c.jobs = 4;
  const auto s2 = h::run_campaign(c);
  CHECK(s1.ok());
  CHECK(s1.records == s2.records);
  CHECK(s1.failed == 0);
  const auto text = read_file(a);
  CHECK_FALSE(text.empty());
  CHECK(text == read_file(b));

  std::istringstream lines(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    CHECK(line.rfind(R"({"id":")", 0) == 0);
    CHECK(line.find(R"("us":0})") != std::string::npos);
  }
  CHECK(count == s1.records);
  CHECK(text.find(R"("check":"axioms")") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("fault injection produces counterexamples") {
  auto c = small_config();
  c.fault_inject = true;
  const auto summary = h::run_campaign(c);
  CHECK_FALSE(summary.ok());
  CHECK(summary.failed > 0);
  CHECK_FALSE(summary.failures.empty());
  CHECK(summary.failures.size() <= h::CampaignSummary::kMaxListedFailures);
  CHECK(std::is_sorted(summary.failures.begin(), summary.failures.end()));
}

TEST_CASE("unwritable report path") {
  auto c = small_config();
  c.out = "/nonexistent/dir/report.jsonl";
  CHECK_THROWS_AS(h::run_campaign(c), h::ConfigError);
}
