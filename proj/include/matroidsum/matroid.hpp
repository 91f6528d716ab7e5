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

// Finite matroids given by an explicit base family.
//
// Ground elements are indices 0..m-1 with m <= kMaxGroundSize; subsets are
// 16-bit membership masks. A Matroid is only ever constructed through a
// validating factory, so every instance satisfies the base axioms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroidsum/error.hpp"
#include "matroidsum/kernels.hpp"

namespace matroidsum {

inline constexpr unsigned kMaxGroundSize = 16;

using Mask = kernels::BaseMask;

class ElementSet {
 public:
  ElementSet() = default;
  // Throws DomainError if the ground size exceeds the cap or an element is
  // out of range.
  ElementSet(unsigned ground_size, std::initializer_list<unsigned> elements);
  static ElementSet from_mask(unsigned ground_size, std::uint32_t mask);
  static ElementSet from_elements(unsigned ground_size, const std::vector<unsigned>& elements);
  static ElementSet all(unsigned ground_size);

  unsigned ground_size() const noexcept { return ground_size_; }
  Mask mask() const noexcept { return mask_; }
  unsigned size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(unsigned element) const noexcept;
  std::vector<unsigned> elements() const;

  ElementSet with(unsigned element) const;
  ElementSet without(unsigned element) const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;
  bool is_subset_of(const ElementSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.mask_ <=> b.mask_; }

 private:
  unsigned ground_size_ = 0;
  Mask mask_ = 0;
};

enum class Axiom { B1, B2, B3 };

const char* axiom_name(Axiom axiom);

// First axiom a candidate family breaks. For B2 `first` is strictly
// contained in `second`; for B3 no y in second \ first repairs
// (first \ {x}) + y.
struct AxiomViolation {
  Axiom axiom;
  std::optional<ElementSet> first;
  std::optional<ElementSet> second;
  std::optional<unsigned> element;

  std::string describe() const;
};

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomViolation violation)
      : Error("not a matroid: " + violation.describe()), violation_(std::move(violation)) {}
  const AxiomViolation& violation() const noexcept { return violation_; }

 private:
  AxiomViolation violation_;
};

// Checks (B1)-(B3) on a family, in that order. Duplicates are ignored.
std::optional<AxiomViolation> find_axiom_violation(unsigned ground_size, std::span<const ElementSet> family);

struct Contraction;

class Matroid {
 public:
  // Throws AxiomError on the first violated axiom, DomainError on bad sizes
  // and MismatchError when a base has a different ground size.
  static Matroid from_bases(unsigned ground_size, std::span<const ElementSet> bases);
  static Matroid from_bases(unsigned ground_size, std::initializer_list<ElementSet> bases);
  static Matroid uniform(unsigned ground_size, unsigned rank);
  // Column matroid of a matrix over GF(p). `columns[j]` is column j; entries
  // are reduced mod p.
  static Matroid from_matrix_gf_p(unsigned p, const std::vector<std::vector<long>>& columns);
  // Elements of `first` keep their indices; those of `second` are shifted by
  // first.ground_size().
  static Matroid direct_sum(const Matroid& first, const Matroid& second);

  unsigned ground_size() const noexcept { return ground_size_; }
  unsigned rank() const noexcept { return rank_; }
  // Sorted ascending by mask, no duplicates.
  std::span<const Mask> base_masks() const noexcept { return bases_; }
  std::vector<ElementSet> bases() const;
  std::size_t base_count() const noexcept { return bases_.size(); }
  bool is_base(const ElementSet& set) const;
  bool is_independent(const ElementSet& set) const;

  unsigned rank(const ElementSet& set) const;
  ElementSet closure(const ElementSet& set) const;
  ElementSet loops() const;
  // Minimal sets contained in no base, sorted by mask.
  std::vector<ElementSet> circuits() const;
  // Closed sets of rank r(M) - 1, sorted by mask. Throws DomainError when
  // r(M) = 0.
  std::vector<ElementSet> hyperplanes() const;
  Contraction contract(const ElementSet& set) const;

  ElementSet ground() const { return ElementSet::all(ground_size_); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(unsigned ground_size, std::vector<Mask> bases);
  void require_ground(const ElementSet& set, const char* op) const;

  unsigned ground_size_ = 0;
  unsigned rank_ = 0;
  std::vector<Mask> bases_;
};

// M/A together with the map from its dense indices back to M's elements:
// element i of `minor` is element `kept[i]` of the original matroid.
struct Contraction {
  Matroid minor;
  std::vector<unsigned> kept;

  // Image of a minor subset in the original ground set.
  ElementSet lift(const ElementSet& minor_set, unsigned original_ground_size) const;
  // Preimage in the minor of an original subset; elements outside `kept`
  // are dropped.
  ElementSet project(const ElementSet& original_set) const;
};

}  // namespace matroidsum
