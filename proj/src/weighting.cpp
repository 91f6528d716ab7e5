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

#include "matroidsum/weighting.hpp"

#include <algorithm>

namespace matroidsum {

WeightFunction::WeightFunction(CyclicGroup group, const std::vector<long>& values) : group_(group) {
  if (values.size() > kMaxGroundSize) {
    throw DomainError("weight function on " + std::to_string(values.size()) + " elements exceeds cap " +
                      std::to_string(kMaxGroundSize));
  }
  values_.reserve(values.size());
  for (auto v : values) values_.push_back(static_cast<std::uint8_t>(GroupElement(group, v).value()));
}

GroupElement WeightFunction::operator()(unsigned element) const {
  if (element >= values_.size()) throw DomainError("weight of element " + std::to_string(element) + " out of range");
  return {group_, values_[element]};
}

GroupSet WeightFunction::image() const {
  std::uint64_t mask = 0;
  for (auto v : values_) mask |= std::uint64_t{1} << v;
  return GroupSet::from_mask(group_, mask);
}

WeightFunction WeightFunction::reindexed(const std::vector<unsigned>& kept) const {
  std::vector<std::uint8_t> out;
  out.reserve(kept.size());
  for (auto i : kept) {
    if (i >= values_.size()) throw DomainError("reindex: element " + std::to_string(i) + " out of range");
    out.push_back(values_[i]);
  }
  return WeightFunction(Reduced{}, group_, std::move(out));
}

WeightFunction WeightFunction::shifted(const GroupElement& c) const {
  if (c.group() != group_) throw MismatchError("shift by an element of another group");
  std::vector<std::uint8_t> out;
  out.reserve(values_.size());
  for (auto v : values_) out.push_back(static_cast<std::uint8_t>((v + c.value()) % group_.modulus()));
  return WeightFunction(Reduced{}, group_, std::move(out));
}

WeightedMatroid::WeightedMatroid(Matroid matroid, WeightFunction weights)
    : matroid_(std::move(matroid)), weights_(std::move(weights)) {
  if (matroid_.ground_size() != weights_.ground_size()) {
    throw MismatchError("matroid on " + std::to_string(matroid_.ground_size()) + " elements, weights on " +
                        std::to_string(weights_.ground_size()));
  }
}

GroupElement subset_weight(const WeightFunction& w, const ElementSet& subset) {
  if (subset.ground_size() != w.ground_size()) throw MismatchError("subset_weight: ground size mismatch");
  long sum = 0;
  for (auto e : subset.elements()) sum += w.residues()[e];
  return {w.group(), sum};
}

GroupSet base_weight_set(const WeightedMatroid& wm) {
  const auto mask = kernels::active().weight_mask(wm.matroid().base_masks(), wm.weights().residues(),
                                                  wm.group().modulus());
  return GroupSet::from_mask(wm.group(), mask);
}

std::vector<ElementSet> fibers(const WeightFunction& w) {
  std::vector<std::uint32_t> masks(w.group().modulus(), 0);
  const auto& r = w.residues();
  for (std::size_t i = 0; i < r.size(); ++i) masks[r[i]] |= std::uint32_t{1} << i;
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(ElementSet::from_mask(w.ground_size(), m));
  return out;
}

unsigned fiber_rank_sum(const WeightedMatroid& wm) {
  unsigned total = 0;
  for (const auto& f : fibers(wm.weights())) total += wm.matroid().rank(f);
  return total;
}

unsigned ss_bound(const WeightedMatroid& wm) {
  const unsigned r = wm.matroid().rank();
  if (r == 0) throw DomainError("ss_bound: matroid has rank 0");
  return std::min(wm.group().modulus(), fiber_rank_sum(wm) - r + 1);
}

GroupSet neighborhood_weights(const WeightedMatroid& wm, unsigned u) {
  if (u >= wm.matroid().ground_size()) throw DomainError("neighborhood_weights: element " + std::to_string(u) + " out of range");
  std::uint64_t mask = 0;
  const auto fs = fibers(wm.weights());
  for (std::size_t g = 0; g < fs.size(); ++g) {
    if (wm.matroid().closure(fs[g]).contains(u)) mask |= std::uint64_t{1} << g;
  }
  return GroupSet::from_mask(wm.group(), mask);
}

WeightedContraction contract(const WeightedMatroid& wm, const ElementSet& set) {
  auto c = wm.matroid().contract(set);
  auto w = wm.weights().reindexed(c.kept);
  return {WeightedMatroid(std::move(c.minor), std::move(w)), std::move(c.kept)};
}

}  // namespace matroidsum
