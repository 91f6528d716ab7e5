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

#include "matroidsum/cyclic_sets.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace matroidsum {
namespace {

// Cyclic left rotation of an n-bit mask by k positions (0 <= k < n).
std::uint64_t rotate(std::uint64_t mask, unsigned k, unsigned n, std::uint64_t full) {
  if (k == 0) return mask;
  return ((mask << k) | (mask >> (n - k))) & full;
}

void require_same_group(const CyclicGroup& a, const CyclicGroup& b, const char* op) {
  if (a != b) {
    throw MismatchError(std::string(op) + ": operands in Z_" + std::to_string(a.modulus()) +
                        " and Z_" + std::to_string(b.modulus()));
  }
}

bool generates(unsigned value, unsigned n) { return std::gcd(value, n) == 1 || n == 1; }

// True iff every nonzero element of `diffs` generates Z_n.
bool all_nonzero_generate(std::uint64_t diffs, unsigned n) {
  diffs &= ~std::uint64_t{1};
  while (diffs != 0) {
    const auto d = static_cast<unsigned>(std::countr_zero(diffs));
    if (!generates(d, n)) return false;
    diffs &= diffs - 1;
  }
  return true;
}

}  // namespace

CyclicGroup::CyclicGroup(unsigned modulus) : modulus_(modulus) {
  if (modulus < 1 || modulus > kMaxModulus) {
    throw DomainError("modulus must be in 1.." + std::to_string(kMaxModulus) + ", got " +
                      std::to_string(modulus));
  }
}

std::uint64_t CyclicGroup::full_mask() const noexcept {
  return modulus_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << modulus_) - 1;
}

GroupElement::GroupElement(CyclicGroup group, std::int64_t value) : group_(group) {
  const auto n = static_cast<std::int64_t>(group.modulus());
  value_ = static_cast<unsigned>(((value % n) + n) % n);
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  require_same_group(group_, other.group_, "add");
  return {group_, static_cast<std::int64_t>(value_) + other.value_};
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  require_same_group(group_, other.group_, "subtract");
  return {group_, static_cast<std::int64_t>(value_) - other.value_};
}

GroupElement GroupElement::operator-() const { return {group_, -static_cast<std::int64_t>(value_)}; }

GroupSet::GroupSet(CyclicGroup group, std::initializer_list<std::int64_t> members) : group_(group) {
  for (auto m : members) mask_ |= std::uint64_t{1} << GroupElement(group, m).value();
}

GroupSet GroupSet::from_values(CyclicGroup group, const std::vector<unsigned>& members) {
  std::uint64_t mask = 0;
  for (auto m : members) mask |= std::uint64_t{1} << (m % group.modulus());
  return {group, mask, 0};
}

GroupSet GroupSet::from_mask(CyclicGroup group, std::uint64_t mask) {
  if ((mask & ~group.full_mask()) != 0) {
    throw DomainError("mask has bits outside Z_" + std::to_string(group.modulus()));
  }
  return {group, mask, 0};
}

GroupSet GroupSet::full(CyclicGroup group) { return {group, group.full_mask(), 0}; }

unsigned GroupSet::size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

bool GroupSet::contains(unsigned residue) const noexcept {
  return residue < group_.modulus() && ((mask_ >> residue) & 1U) != 0;
}

bool GroupSet::contains(const GroupElement& g) const {
  require_same_group(group_, g.group(), "contains");
  return contains(g.value());
}

bool GroupSet::is_subset_of(const GroupSet& other) const {
  require_same_group(group_, other.group_, "subset");
  return (mask_ & ~other.mask_) == 0;
}

std::vector<unsigned> GroupSet::members() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (auto m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  return out;
}

GroupSet GroupSet::complement() const { return {group_, ~mask_ & group_.full_mask(), 0}; }

GroupSet GroupSet::negated() const {
  std::uint64_t out = 0;
  const unsigned n = group_.modulus();
  for (auto m : members()) out |= std::uint64_t{1} << ((n - m) % n);
  return {group_, out, 0};
}

std::string GroupSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto m : members()) {
    if (!first) os << ',';
    os << m;
    first = false;
  }
  os << '}';
  return os.str();
}

GroupSet sumset(const GroupSet& a, const GroupSet& b) {
  require_same_group(a.group(), b.group(), "sumset");
  const unsigned n = a.modulus();
  const auto full = a.group().full_mask();
  std::uint64_t out = 0;
  for (auto m = a.mask(); m != 0; m &= m - 1) {
    out |= rotate(b.mask(), static_cast<unsigned>(std::countr_zero(m)), n, full);
  }
  return GroupSet::from_mask(a.group(), out);
}

GroupSet difference_set(const GroupSet& a, const GroupSet& b) {
  require_same_group(a.group(), b.group(), "difference_set");
  return sumset(a, b.negated());
}

GroupSet translate(const GroupSet& a, const GroupElement& g) {
  require_same_group(a.group(), g.group(), "translate");
  return GroupSet::from_mask(a.group(), rotate(a.mask(), g.value(), a.modulus(), a.group().full_mask()));
}

bool is_generator(const GroupElement& g) { return generates(g.value(), g.group().modulus()); }

bool pollard_condition(const GroupSet& s) {
  if (s.empty()) throw DomainError("pollard_condition: empty set");
  return all_nonzero_generate(difference_set(s, s).mask(), s.modulus());
}

bool chowla_condition(const GroupSet& b) {
  if (b.empty()) throw DomainError("chowla_condition: empty set");
  for (auto pivot : b.members()) {
    const auto shifted = translate(b, -GroupElement(b.group(), pivot));
    if (all_nonzero_generate(shifted.mask(), b.modulus())) return true;
  }
  return false;
}

GroupSet ap_differences(const GroupSet& s) {
  if (s.empty()) throw DomainError("ap_differences: empty set");
  const unsigned n = s.modulus();
  const unsigned k = s.size();
  std::uint64_t out = 0;
  for (unsigned d = 0; d < n; ++d) {
    for (auto start : s.members()) {
      std::uint64_t walked = 0;
      unsigned x = start;
      unsigned i = 0;
      for (; i < k; ++i) {
        const auto bit = std::uint64_t{1} << x;
        if ((walked & bit) != 0 || (s.mask() & bit) == 0) break;
        walked |= bit;
        x = (x + d) % n;
      }
      if (i == k) {
        out |= std::uint64_t{1} << d;
        break;
      }
    }
  }
  return GroupSet::from_mask(s.group(), out);
}

bool is_arithmetic_progression(const GroupSet& s) { return !ap_differences(s).empty(); }

}  // namespace matroidsum
