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

#pragma once

// Instance catalogs, verification campaigns and their JSON Lines reports.
//
// An instance is a matroid (named by a compact spec string, see
// parse_matroid_spec) with a weight map into Z_n. A campaign enumerates a
// catalog of instances, runs the requested checks on each and writes one
// report record per (instance, check), sorted by (id, check) so the output
// does not depend on thread count or scheduling.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matroidsum/error.hpp"
#include "matroidsum/matroid.hpp"

namespace matroidsum::harness {

// Malformed configuration or command-line input (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// ------------------------------------------------------------ spec strings
//
//   uniform:M:R              U_R on M elements
//   sum:M1:R1:M2:R2          U_R1(M1) + U_R2(M2), first summand's elements first
//   gf:P:(c,c,..)(c,..)..    column matroid over GF(P), one tuple per column
//   bases:M:{e,e}{e}..       explicit base family; {} is the empty base
//
// Throws ConfigError on syntax errors and AxiomError for base families that
// are not matroids.
Matroid parse_matroid_spec(std::string_view spec);

std::string uniform_spec(unsigned ground_size, unsigned rank);
std::string sum_spec(unsigned m1, unsigned r1, unsigned m2, unsigned r2);
std::string matrix_spec(unsigned p, const std::vector<std::vector<long>>& columns);
std::string bases_spec(unsigned ground_size, std::span<const Mask> bases);

// 64-bit FNV-1a, the hash behind instance ids.
std::uint64_t fnv1a64(std::string_view bytes);

// ------------------------------------------------------------------- RNG
//
// Samples come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Bounded integers are drawn by rejection: take the top
// 64 bits, reject values >= the largest multiple of the bound, reduce mod
// the bound. Each work unit seeds its own engine with seed XOR fnv1a64(key)
// so results do not depend on scheduling.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  SampleRng(std::uint64_t seed, std::string_view key) : engine_(seed ^ fnv1a64(key)) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// ------------------------------------------------------------- instances

struct InstanceDescriptor {
  std::string id;
  std::string matroid_spec;
  unsigned modulus = 0;
  std::vector<unsigned> weights;

  friend bool operator==(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

// "<spec>|Z<n>|w=<w0>,<w1>,..."; hashed into the id.
std::string canonical_text(std::string_view matroid_spec, unsigned modulus, std::span<const unsigned> weights);
std::string instance_id(std::string_view matroid_spec, unsigned modulus, std::span<const unsigned> weights);
InstanceDescriptor make_descriptor(std::string matroid_spec, unsigned modulus, std::vector<unsigned> weights);

enum class Check { Axioms, Chowla, Egz, Lemma1, Lemma2, Main, Vosper };

std::string_view check_name(Check check);
Check parse_check(std::string_view name);

// ---------------------------------------------------------------- config

struct CampaignConfig {
  // Any of: uniform, direct_sum, gf2, gf3, random_gf3, hand_listed,
  // parallel_class, negative_controls, pairs, egz.
  std::vector<std::string> families;

  unsigned uniform_max_ground = 5;      // 1 <= r <= m <= this
  unsigned direct_sum_max_ground = 6;   // m1 + m2 <= this, each 0 <= r_i <= m_i
  unsigned gf2_max_rows = 3;
  unsigned gf2_max_cols = 4;
  unsigned gf3_max_rows = 2;
  unsigned gf3_max_cols = 3;
  unsigned random_gf3_count = 0;
  unsigned random_gf3_rows = 3;
  unsigned random_gf3_cols = 6;

  // Weight maps for the matroid families.
  std::vector<unsigned> moduli{2, 3, 5};
  unsigned weight_samples = 0;  // 0: every map; otherwise this many per (matroid, n)
  bool pollard_filter = true;

  // U_1(A) + U_1(B) with w(x, i) = x, every nonempty A and B.
  std::vector<unsigned> pairs_moduli;
  // U_n on 2n - 1 elements, weights = the sequence.
  std::vector<unsigned> egz_moduli;
  unsigned egz_samples = 0;  // 0: every sequence

  std::vector<Check> checks{Check::Main, Check::Lemma1, Check::Lemma2};
  unsigned lemma1_max_ground = 5;

  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string out;  // empty: no report file
  bool fault_inject = false;
  bool timing = false;  // record wall time; off keeps reports byte-stable

  // Throws ConfigError on any inconsistency.
  void validate() const;
};

// Reads a JSON object whose keys are the field names above. Unknown keys
// and mistyped values are rejected. Pass validate = false to defer
// validate() until command-line overrides (such as the seed) are applied.
CampaignConfig load_config(const std::string& path, bool validate = true);
CampaignConfig parse_config(std::string_view json_text, bool validate = true);

// --------------------------------------------------------------- catalog

// One enumerated instance. The matroid is shared by many instances.
struct InstanceView {
  const std::string& matroid_spec;
  const Matroid& matroid;
  unsigned modulus;
  std::span<const unsigned> weights;
};

// A block of instances enumerated together; the unit of parallel work.
struct WorkUnit {
  std::string key;
  std::function<void(const std::function<void(const InstanceView&)>&)> enumerate;
};

// Base-family specs that must be rejected by the axiom check.
std::vector<std::string> negative_control_specs();

// Throws ConfigError on invalid configs.
std::vector<WorkUnit> catalog_units(const CampaignConfig& config);

std::vector<InstanceDescriptor> build_catalog(const CampaignConfig& config);

// ---------------------------------------------------------------- report

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status status);

struct ReportRecord {
  std::string id;
  Check check = Check::Main;
  std::optional<long> bound;
  std::optional<long> weight_count;
  std::optional<bool> inequality;
  std::optional<bool> equality;
  std::optional<bool> case_i;
  std::optional<bool> case_ii;
  Status status = Status::Pass;
  std::uint64_t us = 0;

  // One JSON object, keys in fixed order, no trailing newline.
  std::string to_json() const;
};

bool record_order(const ReportRecord& a, const ReportRecord& b);

struct InstanceChecks {
  std::span<const Check> checks;
  bool fault_inject = false;
  bool timing = false;
  unsigned lemma1_max_ground = 5;
};

// Runs every requested check on one instance. `lemma1_cache` may be null.
std::vector<ReportRecord> evaluate_instance(const InstanceView& instance, const InstanceChecks& options,
                                            std::optional<bool>* lemma1_cache = nullptr);

// -------------------------------------------------------------- campaign

struct CampaignSummary {
  std::uint64_t instances = 0;
  std::uint64_t records = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  // Sorted ids of failing records, at most kMaxListedFailures of them.
  std::vector<std::string> failures;

  static constexpr std::size_t kMaxListedFailures = 20;

  bool ok() const { return failed == 0; }
};

// Evaluates the catalog with config.jobs threads and, if config.out is set,
// writes the sorted JSONL report there (ConfigError if unwritable).
CampaignSummary run_campaign(const CampaignConfig& config);

}  // namespace matroidsum::harness
