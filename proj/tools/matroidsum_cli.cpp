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

// matroidsum: command-line front end for the verifiers and campaigns.
//
// Exit codes: 0 all checks pass, 1 counterexample found, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "matroidsum/harness.hpp"
#include "matroidsum/theorems.hpp"
#include "matroidsum/weighting.hpp"

namespace {

using namespace matroidsum;
namespace h = matroidsum::harness;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInvalid = 2;

struct InstanceArgs {
  std::string matroid;
  unsigned modulus = 0;
  std::vector<long> weights;
  bool fault_inject = false;
  std::string out;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--matroid", args.matroid, "matroid spec, e.g. uniform:3:2 or bases:4:{0,1}{0,2}{0,3}")->required();
  cmd->add_option("--modulus", args.modulus, "group order n")->required();
  cmd->add_option("--weights", args.weights, "comma-separated weights w(0),w(1),...")->delimiter(',')->required();
  cmd->add_flag("--fault-inject", args.fault_inject, "add one to every computed bound");
  cmd->add_option("--out", args.out, "also write the JSONL records here");
}

int emit(const std::vector<h::ReportRecord>& records, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw h::ConfigError("cannot write '" + out_path + "'");
  }
  bool failed = false;
  for (const auto& r : records) {
    std::cout << r.to_json() << '\n';
    if (file) file << r.to_json() << '\n';
    failed = failed || r.status == h::Status::Fail;
  }
  return failed ? kExitCounterexample : kExitPass;
}

std::vector<unsigned> residues(const std::vector<long>& weights, unsigned modulus) {
  std::vector<unsigned> out;
  for (auto w : weights) out.push_back(GroupElement(CyclicGroup(modulus), w).value());
  return out;
}

int run_instance(const InstanceArgs& args, std::vector<h::Check> checks, bool describe) {
  const auto matroid = h::parse_matroid_spec(args.matroid);
  const auto w = residues(args.weights, args.modulus);
  if (w.size() != matroid.ground_size()) {
    throw h::ConfigError("expected " + std::to_string(matroid.ground_size()) + " weights, got " +
                         std::to_string(w.size()));
  }
  if (describe && matroid.rank() > 0) {
    const WeightedMatroid wm(matroid, WeightFunction(CyclicGroup(args.modulus), args.weights));
    const auto v = check_main(wm, {args.fault_inject});
    std::cerr << "M^w = " << base_weight_set(wm).to_string() << ", bound = " << v.bound
              << ", pollard = " << (v.pollard_ok ? "yes" : "no");
    if (v.witness_hyperplane) {
      std::cerr << ", witness H = " << v.witness_hyperplane->to_string() << ", g = " << v.witness_shift->value();
    }
    std::cerr << '\n';
  }
  const h::InstanceView view{args.matroid, matroid, args.modulus, w};
  const h::InstanceChecks options{checks, args.fault_inject, false, 8};
  return emit(h::evaluate_instance(view, options), args.out);
}

GroupSet read_set(unsigned modulus, const std::vector<long>& values) {
  std::vector<unsigned> members;
  for (auto v : values) members.push_back(GroupElement(CyclicGroup(modulus), v).value());
  return GroupSet::from_values(CyclicGroup(modulus), members);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct matroid base weights in cyclic groups: verifiers and campaigns"};
  app.require_subcommand(1);

  InstanceArgs main_args;
  auto* verify_main = app.add_subcommand("verify-main", "check the base-weight bound and its equality cases");
  add_instance_options(verify_main, main_args);

  InstanceArgs lemma_args;
  auto* verify_lemmas = app.add_subcommand("verify-lemmas", "check the contraction identities and (M/u)^w + G_u in M^w");
  add_instance_options(verify_lemmas, lemma_args);

  unsigned set_modulus = 0;
  std::vector<long> set_a;
  std::vector<long> set_b;
  bool set_fault = false;
  auto* sumset_cmd = app.add_subcommand("sumset", "A + B with the Chowla-Kemperman check");
  auto* vosper_cmd = app.add_subcommand("vosper", "classify a critical pair in Z_p");
  for (auto* cmd : {sumset_cmd, vosper_cmd}) {
    cmd->add_option("--modulus", set_modulus, "group order")->required();
    cmd->add_option("--a", set_a, "elements of A")->delimiter(',')->required();
    cmd->add_option("--b", set_b, "elements of B")->delimiter(',')->required();
  }
  sumset_cmd->add_flag("--fault-inject", set_fault, "add one to the bound");

  unsigned egz_modulus = 0;
  std::vector<long> sequence;
  auto* egz_cmd = app.add_subcommand("egz", "find n terms summing to zero among 2n-1");
  egz_cmd->add_option("--modulus", egz_modulus, "group order n")->required();
  egz_cmd->add_option("--sequence", sequence, "the 2n-1 terms")->delimiter(',')->required();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<std::string> out;
  bool fault_inject = false;
  bool timing = false;
  auto* campaign_cmd = app.add_subcommand("campaign", "run a verification campaign over an instance catalog");
  campaign_cmd->add_option("--config", config_path, "JSON config file");
  campaign_cmd->add_option("--seed", seed, "RNG seed (overrides config)");
  campaign_cmd->add_option("--jobs", jobs, "worker threads (overrides config)");
  campaign_cmd->add_option("--out", out, "JSONL report path (overrides config)");
  campaign_cmd->add_flag("--fault-inject", fault_inject, "add one to every computed bound");
  campaign_cmd->add_flag("--timing", timing, "record per-check wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*verify_main) return run_instance(main_args, {h::Check::Main}, true);
    if (*verify_lemmas) return run_instance(lemma_args, {h::Check::Lemma1, h::Check::Lemma2}, false);

    if (*sumset_cmd) {
      const auto a = read_set(set_modulus, set_a);
      const auto b = read_set(set_modulus, set_b);
      const auto sum = sumset(a, b);
      std::cout << "A+B = " << sum.to_string() << " (|A+B| = " << sum.size() << ")\n";
      if (a.size() < 2 || b.size() < 2) return kExitPass;
      const auto v = check_chowla_kemperman(a, b, {set_fault});
      std::cout << "chowla applicable=" << v.applicable << " bound=" << v.bound << " inequality=" << v.inequality_holds
                << " equality=" << v.equality << " ap=" << v.is_ap << '\n';
      return v.consistent() ? kExitPass : kExitCounterexample;
    }
    if (*vosper_cmd) {
      const auto v = check_vosper(read_set(set_modulus, set_a), read_set(set_modulus, set_b));
      std::cout << "applicable=" << v.applicable << " |A+B|=" << v.sum_size << " complement=" << v.case_complement;
      if (v.witness_c) std::cout << " (c=" << v.witness_c->value() << ")";
      std::cout << " progression=" << v.case_ap;
      if (v.witness_d) std::cout << " (d=" << v.witness_d->value() << ")";
      std::cout << '\n';
      return v.consistent() ? kExitPass : kExitCounterexample;
    }
    if (*egz_cmd) {
      const auto s = make_sequence(CyclicGroup(egz_modulus), sequence);
      const auto witness = egz_witness(s);
      if (!witness) {
        std::cout << "no zero-sum subsequence of length " << egz_modulus << '\n';
        return kExitCounterexample;
      }
      std::cout << "indices:";
      for (auto i : *witness) std::cout << ' ' << i;
      std::cout << '\n';
      if (egz_matroid_route_applies(s) && pollard_condition(read_set(egz_modulus, sequence))) {
        const bool agrees = check_egz_via_matroid(s);
        std::cout << "matroid route: M^w = Z_" << egz_modulus << (agrees ? "" : " FAILED") << '\n';
        if (!agrees) return kExitCounterexample;
      }
      return kExitPass;
    }
    if (*campaign_cmd) {
      auto config = config_path.empty() ? h::CampaignConfig{} : h::load_config(config_path, false);
      if (config_path.empty()) config.families = {"uniform", "direct_sum", "hand_listed", "negative_controls"};
      if (seed) config.seed = *seed;
      if (jobs) config.jobs = *jobs;
      if (out) config.out = *out;
      config.fault_inject = config.fault_inject || fault_inject;
      config.timing = config.timing || timing;
      const auto summary = h::run_campaign(config);
      std::cout << "instances=" << summary.instances << " records=" << summary.records << " passed=" << summary.passed
                << " failed=" << summary.failed << " skipped=" << summary.skipped << '\n';
      for (const auto& id : summary.failures) std::cout << "counterexample " << id << '\n';
      return summary.ok() ? kExitPass : kExitCounterexample;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
