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

#include "matroidsum/theorems.hpp"

#include <algorithm>
#include <bit>

namespace matroidsum {
namespace {

std::vector<Mask> lifted_bases(const Contraction& c, unsigned ground_size) {
  std::vector<Mask> out;
  for (const auto& b : c.minor.bases()) out.push_back(c.lift(b, ground_size).mask());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_two_each(const GroupSet& a, const GroupSet& b, const char* op) {
  if (a.size() < 2 || b.size() < 2) {
    throw DomainError(std::string(op) + ": requires |A|, |B| >= 2, got " + std::to_string(a.size()) + ", " +
                      std::to_string(b.size()));
  }
}

}  // namespace

MainVerdict check_main(const WeightedMatroid& wm, CheckOptions options) {
  const auto& m = wm.matroid();
  if (m.rank() == 0) throw DomainError("check_main: matroid has rank 0");

  MainVerdict v;
  const auto weights = base_weight_set(wm);
  v.weight_count = weights.size();
  v.bound = ss_bound(wm) + (options.fault_inject ? 1U : 0U);
  v.pollard_ok = pollard_condition(wm.weights().image());
  if (!v.pollard_ok) return v;

  v.inequality_holds = v.weight_count >= v.bound;
  v.is_equality = v.weight_count == v.bound;
  if (!v.is_equality) return v;

  v.case_i = m.rank() == 1 || is_arithmetic_progression(weights);
  for (const auto& h : m.hyperplanes()) {
    const auto minor_weights = base_weight_set(contract(wm, h).minor);
    if (minor_weights.size() != weights.size()) continue;
    for (unsigned g = 0; g < wm.group().modulus(); ++g) {
      const GroupElement shift(wm.group(), g);
      if (translate(minor_weights, shift) == weights) {
        v.case_ii = true;
        v.witness_hyperplane = h;
        v.witness_shift = shift;
        return v;
      }
    }
  }
  return v;
}

bool check_ss_lemma(const WeightedMatroid& wm, unsigned u) {
  const auto& m = wm.matroid();
  if (u >= m.ground_size()) throw DomainError("check_ss_lemma: element " + std::to_string(u) + " out of range");
  const auto single = ElementSet::from_elements(m.ground_size(), {u});
  if (m.rank(single) == 0) throw DomainError("check_ss_lemma: element " + std::to_string(u) + " is a loop");

  const auto minor_weights = base_weight_set(contract(wm, single).minor);
  const auto g_u = neighborhood_weights(wm, u);
  return sumset(minor_weights, g_u).is_subset_of(base_weight_set(wm));
}

std::optional<unsigned> first_ss_lemma_failure(const WeightedMatroid& wm) {
  const auto& m = wm.matroid();
  const auto loops = m.loops();
  for (unsigned u = 0; u < m.ground_size(); ++u) {
    if (!loops.contains(u) && !check_ss_lemma(wm, u)) return u;
  }
  return std::nullopt;
}

bool check_contraction_identities(const Matroid& m, const ElementSet& u, const ElementSet& v) {
  if (u.ground_size() != m.ground_size() || v.ground_size() != m.ground_size()) {
    throw MismatchError("check_contraction_identities: subsets not over the matroid's ground set");
  }
  if (!(u & v).empty()) throw DomainError("check_contraction_identities: U and V overlap");
  const unsigned size = m.ground_size();

  const auto by_u = m.contract(u);
  const auto by_closure = m.contract(m.closure(u));
  if (lifted_bases(by_u, size) != lifted_bases(by_closure, size)) return false;

  const auto stepwise = by_u.minor.contract(by_u.project(v));
  const auto at_once = m.contract(u | v);
  std::vector<unsigned> stepwise_kept;
  for (auto i : stepwise.kept) stepwise_kept.push_back(by_u.kept[i]);
  if (stepwise_kept != at_once.kept) return false;

  std::vector<Mask> stepwise_bases;
  for (const auto& b : stepwise.minor.bases()) stepwise_bases.push_back(by_u.lift(stepwise.lift(b, by_u.minor.ground_size()), size).mask());
  std::sort(stepwise_bases.begin(), stepwise_bases.end());
  return stepwise_bases == lifted_bases(at_once, size);
}

bool check_all_contraction_identities(const Matroid& m) {
  const unsigned size = m.ground_size();
  const std::uint32_t full = (std::uint32_t{1} << size) - 1;
  for (std::uint32_t u = 0; u <= full; ++u) {
    const std::uint32_t rest = full & ~u;
    // Every submask of the complement, the empty one included.
    for (std::uint32_t v = rest;; v = (v - 1) & rest) {
      if (!check_contraction_identities(m, ElementSet::from_mask(size, u), ElementSet::from_mask(size, v))) return false;
      if (v == 0) break;
    }
  }
  return true;
}

ChowlaVerdict check_chowla_kemperman(const GroupSet& a, const GroupSet& b, CheckOptions options) {
  require_two_each(a, b, "check_chowla_kemperman");
  const auto sum = sumset(a, b);
  const unsigned n = a.modulus();
  const unsigned target = a.size() + b.size() - 1;

  ChowlaVerdict v;
  v.applicable = chowla_condition(b);
  v.sum_size = sum.size();
  v.bound = std::min(n, target) + (options.fault_inject ? 1U : 0U);
  v.inequality_holds = v.sum_size >= v.bound;
  v.equality = v.sum_size == target && target <= n;
  v.is_ap = is_arithmetic_progression(sum);
  v.ap_consistent = !v.equality || v.is_ap;
  return v;
}

VosperVerdict check_vosper(const GroupSet& a, const GroupSet& b) {
  if (!is_prime(a.modulus())) throw DomainError("check_vosper: modulus " + std::to_string(a.modulus()) + " is not prime");
  require_two_each(a, b, "check_vosper");
  const auto sum = sumset(a, b);
  const unsigned p = a.modulus();

  VosperVerdict v;
  v.sum_size = sum.size();
  v.applicable = v.sum_size == a.size() + b.size() - 1 && v.sum_size < p;

  const auto minus_a = a.negated();
  const auto not_b = b.complement();
  for (unsigned c = 0; c < p; ++c) {
    const GroupElement shift(a.group(), c);
    if (translate(minus_a, shift) == not_b) {
      v.case_complement = true;
      v.witness_c = shift;
      break;
    }
  }
  const auto common = ap_differences(a).mask() & ap_differences(b).mask();
  if (common != 0) {
    v.case_ap = true;
    v.witness_d = GroupElement(a.group(), std::countr_zero(common));
  }
  return v;
}

SequenceInstance make_sequence(CyclicGroup group, const std::vector<long>& terms) {
  SequenceInstance s{group, {}};
  for (auto t : terms) s.terms.emplace_back(group, t);
  return s;
}

std::optional<std::vector<unsigned>> egz_witness(const SequenceInstance& s) {
  const unsigned n = s.group.modulus();
  const std::size_t length = s.terms.size();
  if (length != 2 * n - 1) {
    throw DomainError("egz_witness: expected " + std::to_string(2 * n - 1) + " terms, got " + std::to_string(length));
  }
  // reach[i][k]: residues attainable as a sum of k terms among the first i.
  std::vector<std::vector<std::uint64_t>> reach(length + 1, std::vector<std::uint64_t>(n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < length; ++i) {
    const auto t = GroupElement(s.group, s.terms[i].value());
    for (unsigned k = 0; k <= n; ++k) {
      reach[i + 1][k] |= reach[i][k];
      if (k < n && reach[i][k] != 0) {
        reach[i + 1][k + 1] |= translate(GroupSet::from_mask(s.group, reach[i][k]), t).mask();
      }
    }
  }
  if ((reach[length][n] & 1U) == 0) return std::nullopt;

  std::vector<unsigned> picked;
  unsigned k = n;
  unsigned residue = 0;
  for (std::size_t i = length; i-- > 0 && k > 0;) {
    if (((reach[i][k] >> residue) & 1U) != 0) continue;
    picked.push_back(static_cast<unsigned>(i));
    residue = (residue + n - s.terms[i].value()) % n;
    --k;
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

bool egz_matroid_route_applies(const SequenceInstance& s) {
  const unsigned n = s.group.modulus();
  std::vector<unsigned> counts(n, 0);
  for (const auto& t : s.terms) {
    if (++counts[t.value()] >= n) return false;
  }
  return true;
}

bool check_egz_via_matroid(const SequenceInstance& s) {
  const unsigned n = s.group.modulus();
  if (s.terms.size() != 2 * n - 1) throw DomainError("check_egz_via_matroid: wrong sequence length");
  if (!egz_matroid_route_applies(s)) {
    throw DomainError("check_egz_via_matroid: some residue repeats " + std::to_string(n) + " times");
  }
  std::vector<long> values;
  for (const auto& t : s.terms) values.push_back(t.value());
  const WeightedMatroid wm(Matroid::uniform(2 * n - 1, n), WeightFunction(s.group, values));
  return ss_bound(wm) == n && base_weight_set(wm) == GroupSet::full(s.group);
}

}  // namespace matroidsum
