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
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "matroidsum/harness.hpp"

namespace matroidsum::harness {
namespace {

struct UnitResult {
  std::uint64_t instances = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> failures;
  std::vector<ReportRecord> records;

  void count(const ReportRecord& r, bool keep) {
    switch (r.status) {
      case Status::Pass: ++passed; break;
      case Status::Skipped: ++skipped; break;
      case Status::Fail:
        ++failed;
        if (failures.size() < CampaignSummary::kMaxListedFailures) failures.push_back(r.id);
        break;
    }
    if (keep) records.push_back(r);
  }
};

UnitResult negative_controls(bool keep) {
  UnitResult result;
  for (const auto& spec : negative_control_specs()) {
    ReportRecord r;
    r.id = instance_id(spec, 0, {});
    r.check = Check::Axioms;
    try {
      parse_matroid_spec(spec);
      r.status = Status::Fail;
    } catch (const AxiomError&) {
      r.status = Status::Pass;
    }
    ++result.instances;
    result.count(r, keep);
  }
  return result;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& config) {
  config.validate();
  const bool keep = !config.out.empty();
  std::ofstream out;
  if (keep) {
    out.open(config.out, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write report file '" + config.out + "'");
  }

  const auto units = catalog_units(config);
  std::vector<UnitResult> results(units.size());
  const InstanceChecks options{config.checks, config.fault_inject, config.timing, config.lemma1_max_ground};

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < units.size();) {
      try {
        auto& result = results[i];
        std::map<std::string, std::optional<bool>, std::less<>> lemma1;
        units[i].enumerate([&](const InstanceView& view) {
          ++result.instances;
          auto& cache = lemma1[view.matroid_spec];
          for (auto& r : evaluate_instance(view, options, &cache)) result.count(r, keep);
        });
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(units.size());
      }
    }
  };
  const auto threads = std::max<std::size_t>(1, std::min<std::size_t>(config.jobs, units.size()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);

  if (std::find(config.families.begin(), config.families.end(), "negative_controls") != config.families.end()) {
    results.push_back(negative_controls(keep));
  }

  CampaignSummary summary;
  std::vector<ReportRecord> records;
  for (auto& r : results) {
    summary.instances += r.instances;
    summary.passed += r.passed;
    summary.failed += r.failed;
    summary.skipped += r.skipped;
    summary.failures.insert(summary.failures.end(), r.failures.begin(), r.failures.end());
    std::move(r.records.begin(), r.records.end(), std::back_inserter(records));
  }
  summary.records = summary.passed + summary.failed + summary.skipped;
  std::sort(summary.failures.begin(), summary.failures.end());
  summary.failures.erase(std::unique(summary.failures.begin(), summary.failures.end()), summary.failures.end());
  if (summary.failures.size() > CampaignSummary::kMaxListedFailures) {
    summary.failures.resize(CampaignSummary::kMaxListedFailures);
  }

  if (keep) {
    std::sort(records.begin(), records.end(), record_order);
    for (const auto& r : records) out << r.to_json() << '\n';
    out.flush();
    if (!out) throw ConfigError("failed writing report file '" + config.out + "'");
  }
  return summary;
}

}  // namespace matroidsum::harness
