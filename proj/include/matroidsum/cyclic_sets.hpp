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

// Arithmetic and set algebra in the finite cyclic group Z_n.
//
// Subsets are stored as a membership mask in one 64-bit word, so the modulus
// is capped at kMaxModulus. Residue i is bit i.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "matroidsum/error.hpp"

namespace matroidsum {

inline constexpr unsigned kMaxModulus = 64;

class CyclicGroup {
 public:
  explicit CyclicGroup(unsigned modulus);

  unsigned modulus() const noexcept { return modulus_; }
  std::uint64_t full_mask() const noexcept;

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  unsigned modulus_;
};

class GroupElement {
 public:
  // Reduces `value` modulo the group order.
  GroupElement(CyclicGroup group, std::int64_t value);

  const CyclicGroup& group() const noexcept { return group_; }
  unsigned value() const noexcept { return value_; }

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  CyclicGroup group_;
  unsigned value_;
};

class GroupSet {
 public:
  // The empty set.
  explicit GroupSet(CyclicGroup group) : group_(group) {}
  // Members are reduced modulo n; duplicates collapse.
  GroupSet(CyclicGroup group, std::initializer_list<std::int64_t> members);
  static GroupSet from_values(CyclicGroup group, const std::vector<unsigned>& members);
  // Bits at positions >= n are rejected.
  static GroupSet from_mask(CyclicGroup group, std::uint64_t mask);
  static GroupSet full(CyclicGroup group);

  const CyclicGroup& group() const noexcept { return group_; }
  std::uint64_t mask() const noexcept { return mask_; }
  unsigned modulus() const noexcept { return group_.modulus(); }

  unsigned size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(unsigned residue) const noexcept;
  bool contains(const GroupElement& g) const;
  bool is_subset_of(const GroupSet& other) const;
  std::vector<unsigned> members() const;

  GroupSet complement() const;
  GroupSet negated() const;

  std::string to_string() const;

  friend bool operator==(const GroupSet&, const GroupSet&) = default;

 private:
  GroupSet(CyclicGroup group, std::uint64_t mask, int) : group_(group), mask_(mask) {}

  CyclicGroup group_;
  std::uint64_t mask_ = 0;
};

// {a + b : a in A, b in B}. Empty if either operand is empty.
GroupSet sumset(const GroupSet& a, const GroupSet& b);

// {a - b : a in A, b in B}.
GroupSet difference_set(const GroupSet& a, const GroupSet& b);

GroupSet translate(const GroupSet& a, const GroupElement& g);

// True iff gcd(g, n) = 1. In Z_1 the single element generates.
bool is_generator(const GroupElement& g);

// Every nonzero element of S - S generates the group.
bool pollard_condition(const GroupSet& s);

// Some pivot b in B makes every nonzero element of B - b a generator.
bool chowla_condition(const GroupSet& b);

// All d such that S = {a, a+d, ..., a+(|S|-1)d} for some a, with the |S|
// terms pairwise distinct. Nonempty exactly when S is an arithmetic
// progression. A singleton is a progression for every d (including 0).
GroupSet ap_differences(const GroupSet& s);

bool is_arithmetic_progression(const GroupSet& s);

}  // namespace matroidsum
