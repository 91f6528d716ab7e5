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

#include <charconv>
#include <chrono>

#include "matroidsum/harness.hpp"
#include "matroidsum/theorems.hpp"
#include "matroidsum/weighting.hpp"

namespace matroidsum::harness {
namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// A and B when the instance is U_1(A) + U_1(B) with w(x, i) = x, that is a
// "sum:k:1:l:1" spec whose two weight blocks have no repeated residue.
struct PairShape {
  GroupSet a;
  GroupSet b;
};

std::optional<PairShape> pair_shape(const InstanceView& v) {
  std::string_view spec = v.matroid_spec;
  if (!spec.starts_with("sum:")) return std::nullopt;
  spec.remove_prefix(4);
  unsigned parts[4];
  for (int i = 0; i < 4; ++i) {
    const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), parts[i]);
    if (ec != std::errc{}) return std::nullopt;
    spec.remove_prefix(static_cast<std::size_t>(ptr - spec.data()));
    if (i < 3) {
      if (!spec.starts_with(':')) return std::nullopt;
      spec.remove_prefix(1);
    }
  }
  if (!spec.empty() || parts[1] != 1 || parts[3] != 1) return std::nullopt;
  const CyclicGroup group(v.modulus);
  std::vector<unsigned> first(v.weights.begin(), v.weights.begin() + parts[0]);
  std::vector<unsigned> second(v.weights.begin() + parts[0], v.weights.end());
  PairShape shape{GroupSet::from_values(group, first), GroupSet::from_values(group, second)};
  if (shape.a.size() != parts[0] || shape.b.size() != parts[2]) return std::nullopt;
  return shape;
}

void fill_main(ReportRecord& r, const WeightedMatroid& wm, bool fault_inject) {
  if (wm.matroid().rank() == 0) {
    r.status = Status::Skipped;
    return;
  }
  const auto v = check_main(wm, {fault_inject});
  r.bound = v.bound;
  r.weight_count = v.weight_count;
  if (!v.pollard_ok) {
    r.status = Status::Skipped;
    return;
  }
  r.inequality = v.inequality_holds;
  r.equality = v.is_equality;
  r.case_i = v.case_i;
  r.case_ii = v.case_ii;
  r.status = v.consistent() ? Status::Pass : Status::Fail;
}

void fill_chowla(ReportRecord& r, const InstanceView& view, bool fault_inject) {
  const auto shape = pair_shape(view);
  if (!shape || shape->a.size() < 2 || shape->b.size() < 2) {
    r.status = Status::Skipped;
    return;
  }
  const auto v = check_chowla_kemperman(shape->a, shape->b, {fault_inject});
  r.bound = v.bound;
  r.weight_count = v.sum_size;
  r.inequality = v.inequality_holds;
  r.equality = v.equality;
  r.case_i = v.is_ap;
  if (!v.applicable) {
    r.status = Status::Skipped;
    return;
  }
  r.status = v.consistent() ? Status::Pass : Status::Fail;
}

void fill_vosper(ReportRecord& r, const InstanceView& view) {
  const auto shape = pair_shape(view);
  if (!shape || !is_prime(view.modulus) || shape->a.size() < 2 || shape->b.size() < 2) {
    r.status = Status::Skipped;
    return;
  }
  const auto v = check_vosper(shape->a, shape->b);
  r.bound = shape->a.size() + shape->b.size() - 1;
  r.weight_count = v.sum_size;
  r.equality = v.applicable;
  r.case_i = v.case_complement;
  r.case_ii = v.case_ap;
  if (!v.applicable) {
    r.status = Status::Skipped;
    return;
  }
  r.status = v.consistent() ? Status::Pass : Status::Fail;
}

void fill_egz(ReportRecord& r, const InstanceView& view, const WeightedMatroid& wm) {
  const unsigned n = view.modulus;
  if (view.matroid_spec != uniform_spec(2 * n - 1, n)) {
    r.status = Status::Skipped;
    return;
  }
  std::vector<long> terms(view.weights.begin(), view.weights.end());
  const auto seq = make_sequence(CyclicGroup(n), terms);
  const bool found = egz_witness(seq).has_value();
  r.case_i = found;
  bool agrees = true;
  if (egz_matroid_route_applies(seq) && pollard_condition(wm.weights().image())) {
    agrees = check_egz_via_matroid(seq);
    r.case_ii = agrees;
    r.bound = ss_bound(wm);
    r.weight_count = base_weight_set(wm).size();
  }
  r.status = found && agrees ? Status::Pass : Status::Fail;
}

void append_bool(std::string& out, const std::optional<bool>& v) { out += v ? (*v ? "true" : "false") : "null"; }

void append_int(std::string& out, const std::optional<long>& v) { out += v ? std::to_string(*v) : "null"; }

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string ReportRecord::to_json() const {
  std::string out = "{\"id\":\"";
  out += id;
  out += "\",\"check\":\"";
  out += check_name(check);
  out += "\",\"bound\":";
  append_int(out, bound);
  out += ",\"weight_count\":";
  append_int(out, weight_count);
  out += ",\"inequality\":";
  append_bool(out, inequality);
  out += ",\"equality\":";
  append_bool(out, equality);
  out += ",\"case_i\":";
  append_bool(out, case_i);
  out += ",\"case_ii\":";
  append_bool(out, case_ii);
  out += ",\"status\":\"";
  out += status_name(status);
  out += "\",\"us\":";
  out += std::to_string(us);
  out += '}';
  return out;
}

bool record_order(const ReportRecord& a, const ReportRecord& b) {
  if (a.id != b.id) return a.id < b.id;
  return check_name(a.check) < check_name(b.check);
}

std::vector<ReportRecord> evaluate_instance(const InstanceView& instance, const InstanceChecks& options,
                                            std::optional<bool>* lemma1_cache) {
  const auto id = instance_id(instance.matroid_spec, instance.modulus, instance.weights);
  std::vector<long> values(instance.weights.begin(), instance.weights.end());
  const WeightedMatroid wm(instance.matroid, WeightFunction(CyclicGroup(instance.modulus), values));

  std::vector<ReportRecord> out;
  out.reserve(options.checks.size());
  for (auto check : options.checks) {
    const auto start = std::chrono::steady_clock::now();
    ReportRecord r;
    r.id = id;
    r.check = check;
    switch (check) {
      case Check::Main:
        fill_main(r, wm, options.fault_inject);
        break;
      case Check::Lemma2:
        if (instance.matroid.rank() == 0) {
          r.status = Status::Skipped;
        } else {
          r.status = first_ss_lemma_failure(wm) ? Status::Fail : Status::Pass;
        }
        break;
      case Check::Lemma1: {
        if (instance.matroid.ground_size() > options.lemma1_max_ground) {
          r.status = Status::Skipped;
          break;
        }
        std::optional<bool> local;
        auto& slot = lemma1_cache != nullptr ? *lemma1_cache : local;
        if (!slot) slot = check_all_contraction_identities(instance.matroid);
        r.status = *slot ? Status::Pass : Status::Fail;
        break;
      }
      case Check::Chowla:
        fill_chowla(r, instance, options.fault_inject);
        break;
      case Check::Vosper:
        fill_vosper(r, instance);
        break;
      case Check::Egz:
        fill_egz(r, instance, wm);
        break;
      case Check::Axioms:
        throw DomainError("evaluate_instance: axiom checks apply to negative controls only");
    }
    if (options.timing) {
      r.us = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace matroidsum::harness
