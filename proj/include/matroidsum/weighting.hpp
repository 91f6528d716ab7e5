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

// Weight functions E -> Z_n and the quantities built from them: subset
// weights, the set of distinct base weights M^w, weight fibers w^{-1}(g),
// the base-weight lower bound and the neighbourhood weight sets G_u.

#include <cstdint>
#include <vector>

#include "matroidsum/cyclic_sets.hpp"
#include "matroidsum/matroid.hpp"

namespace matroidsum {

class WeightFunction {
 public:
  // values[i] is w(i); values are reduced modulo the group order.
  WeightFunction(CyclicGroup group, const std::vector<long>& values);

  const CyclicGroup& group() const noexcept { return group_; }
  unsigned ground_size() const noexcept { return static_cast<unsigned>(values_.size()); }
  GroupElement operator()(unsigned element) const;
  // Residues as bytes, the layout the kernels consume.
  const std::vector<std::uint8_t>& residues() const noexcept { return values_; }

  // w(E) as a set.
  GroupSet image() const;
  // w restricted to the elements listed in `kept`, re-indexed densely.
  WeightFunction reindexed(const std::vector<unsigned>& kept) const;
  // w + c on every element.
  WeightFunction shifted(const GroupElement& c) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  struct Reduced {};
  WeightFunction(Reduced, CyclicGroup group, std::vector<std::uint8_t> values)
      : group_(group), values_(std::move(values)) {}

  CyclicGroup group_;
  std::vector<std::uint8_t> values_;
};

class WeightedMatroid {
 public:
  // Throws MismatchError if the ground sizes differ.
  WeightedMatroid(Matroid matroid, WeightFunction weights);

  const Matroid& matroid() const noexcept { return matroid_; }
  const WeightFunction& weights() const noexcept { return weights_; }
  const CyclicGroup& group() const noexcept { return weights_.group(); }

 private:
  Matroid matroid_;
  WeightFunction weights_;
};

GroupElement subset_weight(const WeightFunction& w, const ElementSet& subset);

// {B^w : B a base}.
GroupSet base_weight_set(const WeightedMatroid& wm);

// fibers(w)[g] = w^{-1}(g) for every residue g, empty ones included.
std::vector<ElementSet> fibers(const WeightFunction& w);

// Sum over g of r(w^{-1}(g)).
unsigned fiber_rank_sum(const WeightedMatroid& wm);

// min(n, sum_g r(w^{-1}(g)) - r(M) + 1). Throws DomainError when r(M) = 0.
unsigned ss_bound(const WeightedMatroid& wm);

// {g : u in cl(w^{-1}(g))}. A loop lies in every closure, so G_u = G for it.
GroupSet neighborhood_weights(const WeightedMatroid& wm, unsigned u);

// (M/A, w restricted to E \ A), with the index map of the contraction.
struct WeightedContraction {
  WeightedMatroid minor;
  std::vector<unsigned> kept;
};

WeightedContraction contract(const WeightedMatroid& wm, const ElementSet& set);

}  // namespace matroidsum
