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

#include "matroidsum/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace matroidsum {
namespace {

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(static_cast<unsigned>(m))); }

Mask full_mask(unsigned ground_size) {
  return static_cast<Mask>((std::uint32_t{1} << ground_size) - 1);
}

void require_ground_size(unsigned ground_size) {
  if (ground_size > kMaxGroundSize) {
    throw DomainError("ground size " + std::to_string(ground_size) + " exceeds cap " +
                      std::to_string(kMaxGroundSize));
  }
}

// Next mask with the same popcount (Gosper's hack).
std::uint32_t next_combination(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

template <typename Fn>
void for_each_subset_of_size(unsigned ground_size, unsigned k, Fn&& fn) {
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const std::uint32_t limit = std::uint32_t{1} << ground_size;
  for (std::uint32_t v = (std::uint32_t{1} << k) - 1; v < limit; v = next_combination(v)) {
    fn(static_cast<Mask>(v));
  }
}

void sort_unique(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long pow_mod(long base, unsigned exp, long p) {
  long result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

// Rank over GF(p) of the columns selected by `subset`.
unsigned column_rank(const std::vector<std::vector<long>>& columns, Mask subset, unsigned rows, long p) {
  std::vector<std::vector<long>> work;
  for (unsigned bits = subset; bits != 0; bits &= bits - 1) {
    work.push_back(columns[static_cast<std::size_t>(std::countr_zero(bits))]);
  }
  unsigned rank = 0;
  for (unsigned row = 0; row < rows && rank < work.size(); ++row) {
    auto pivot = std::find_if(work.begin() + rank, work.end(), [row](const auto& c) { return c[row] != 0; });
    if (pivot == work.end()) continue;
    std::iter_swap(work.begin() + rank, pivot);
    auto& piv = work[rank];
    const long inv = pow_mod(piv[row], static_cast<unsigned>(p - 2), p);
    for (auto& v : piv) v = v * inv % p;
    for (std::size_t j = rank + 1; j < work.size(); ++j) {
      const long factor = work[j][row];
      if (factor == 0) continue;
      for (unsigned r = 0; r < rows; ++r) work[j][r] = ((work[j][r] - factor * piv[r]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// independent[X] for every X in 2^E: X lies inside some base.
std::vector<bool> independence_table(unsigned ground_size, std::span<const Mask> bases) {
  const std::uint32_t size = std::uint32_t{1} << ground_size;
  std::vector<bool> indep(size, false);
  for (auto b : bases) indep[b] = true;
  for (std::uint32_t x = size; x-- > 0;) {
    if (!indep[x]) continue;
    for (std::uint32_t bits = x; bits != 0; bits &= bits - 1) indep[x & ~(bits & -bits)] = true;
  }
  return indep;
}

}  // namespace

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(unsigned ground_size, std::initializer_list<unsigned> elements)
    : ElementSet(from_elements(ground_size, std::vector<unsigned>(elements))) {}

ElementSet ElementSet::from_mask(unsigned ground_size, std::uint32_t mask) {
  require_ground_size(ground_size);
  if ((mask & ~std::uint32_t{full_mask(ground_size)}) != 0) {
    throw DomainError("subset mask has elements outside a ground set of size " + std::to_string(ground_size));
  }
  ElementSet s;
  s.ground_size_ = ground_size;
  s.mask_ = static_cast<Mask>(mask);
  return s;
}

ElementSet ElementSet::from_elements(unsigned ground_size, const std::vector<unsigned>& elements) {
  require_ground_size(ground_size);
  std::uint32_t mask = 0;
  for (auto e : elements) {
    if (e >= ground_size) {
      throw DomainError("element " + std::to_string(e) + " outside ground set of size " +
                        std::to_string(ground_size));
    }
    mask |= std::uint32_t{1} << e;
  }
  return from_mask(ground_size, mask);
}

ElementSet ElementSet::all(unsigned ground_size) { return from_mask(ground_size, full_mask(ground_size)); }

unsigned ElementSet::size() const noexcept { return popcount(mask_); }

bool ElementSet::contains(unsigned element) const noexcept {
  return element < ground_size_ && ((mask_ >> element) & 1U) != 0;
}

std::vector<unsigned> ElementSet::elements() const {
  std::vector<unsigned> out;
  for (unsigned bits = mask_; bits != 0; bits &= bits - 1) out.push_back(static_cast<unsigned>(std::countr_zero(bits)));
  return out;
}

ElementSet ElementSet::with(unsigned element) const {
  if (element >= ground_size_) throw DomainError("element " + std::to_string(element) + " out of range");
  return from_mask(ground_size_, mask_ | (1U << element));
}

ElementSet ElementSet::without(unsigned element) const {
  if (element >= ground_size_) throw DomainError("element " + std::to_string(element) + " out of range");
  return from_mask(ground_size_, mask_ & ~(1U << element));
}

namespace {
void require_same_ground(const ElementSet& a, const ElementSet& b) {
  if (a.ground_size() != b.ground_size()) {
    throw MismatchError("subsets of ground sets of sizes " + std::to_string(a.ground_size()) + " and " +
                        std::to_string(b.ground_size()));
  }
}
}  // namespace

ElementSet ElementSet::operator|(const ElementSet& other) const {
  require_same_ground(*this, other);
  return from_mask(ground_size_, mask_ | other.mask_);
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  require_same_ground(*this, other);
  return from_mask(ground_size_, mask_ & other.mask_);
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  require_same_ground(*this, other);
  return from_mask(ground_size_, mask_ & ~other.mask_);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_ground(*this, other);
  return (mask_ & ~other.mask_) == 0;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------------------- axioms

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::B1: return "B1";
    case Axiom::B2: return "B2";
    case Axiom::B3: return "B3";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << axiom_name(axiom);
  switch (axiom) {
    case Axiom::B1:
      os << " (empty base family)";
      break;
    case Axiom::B2:
      os << " (" << first->to_string() << " strictly inside " << second->to_string() << ")";
      break;
    case Axiom::B3:
      os << " (no exchange for x=" << *element << " from " << first->to_string() << " towards "
         << second->to_string() << ")";
      break;
  }
  return os.str();
}

std::optional<AxiomViolation> find_axiom_violation(unsigned ground_size, std::span<const ElementSet> family) {
  require_ground_size(ground_size);
  if (family.empty()) return AxiomViolation{Axiom::B1, std::nullopt, std::nullopt, std::nullopt};

  std::vector<Mask> masks;
  masks.reserve(family.size());
  for (const auto& s : family) {
    if (s.ground_size() != ground_size) {
      throw MismatchError("base " + s.to_string() + " is over a ground set of size " +
                          std::to_string(s.ground_size()) + ", expected " + std::to_string(ground_size));
    }
    masks.push_back(s.mask());
  }
  sort_unique(masks);
  auto as_set = [ground_size](Mask m) { return ElementSet::from_mask(ground_size, m); };

  for (auto a : masks) {
    for (auto b : masks) {
      if (a != b && (a & ~b) == 0) return AxiomViolation{Axiom::B2, as_set(a), as_set(b), std::nullopt};
    }
  }

  std::vector<bool> member(std::size_t{1} << ground_size, false);
  for (auto m : masks) member[m] = true;
  for (auto a : masks) {
    for (auto b : masks) {
      if (a == b) continue;
      for (unsigned xs = a & ~b; xs != 0; xs &= xs - 1) {
        const unsigned x = xs & -xs;
        bool repaired = false;
        for (unsigned ys = b & ~a; ys != 0 && !repaired; ys &= ys - 1) {
          repaired = member[(a & ~x) | (ys & -ys)];
        }
        if (!repaired) {
          return AxiomViolation{Axiom::B3, as_set(a), as_set(b), static_cast<unsigned>(std::countr_zero(x))};
        }
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ Matroid

Matroid::Matroid(unsigned ground_size, std::vector<Mask> bases) : ground_size_(ground_size), bases_(std::move(bases)) {
  sort_unique(bases_);
  assert(!bases_.empty());
  rank_ = popcount(bases_.front());
  assert(std::all_of(bases_.begin(), bases_.end(), [this](Mask b) { return popcount(b) == rank_; }));
}

Matroid Matroid::from_bases(unsigned ground_size, std::span<const ElementSet> bases) {
  if (auto violation = find_axiom_violation(ground_size, bases)) throw AxiomError(*violation);
  std::vector<Mask> masks;
  for (const auto& b : bases) masks.push_back(b.mask());
  return Matroid(ground_size, std::move(masks));
}

Matroid Matroid::from_bases(unsigned ground_size, std::initializer_list<ElementSet> bases) {
  return from_bases(ground_size, std::span<const ElementSet>(bases.begin(), bases.size()));
}

Matroid Matroid::uniform(unsigned ground_size, unsigned rank) {
  require_ground_size(ground_size);
  if (rank > ground_size) {
    throw DomainError("uniform: rank " + std::to_string(rank) + " exceeds ground size " + std::to_string(ground_size));
  }
  std::vector<Mask> bases;
  for_each_subset_of_size(ground_size, rank, [&](Mask m) { bases.push_back(m); });
  return Matroid(ground_size, std::move(bases));
}

Matroid Matroid::from_matrix_gf_p(unsigned p, const std::vector<std::vector<long>>& columns) {
  if (!is_prime(p)) throw DomainError("from_matrix_gf_p: " + std::to_string(p) + " is not prime");
  const auto ground_size = static_cast<unsigned>(columns.size());
  require_ground_size(ground_size);
  const auto rows = columns.empty() ? 0U : static_cast<unsigned>(columns.front().size());
  std::vector<std::vector<long>> reduced;
  for (const auto& c : columns) {
    if (c.size() != rows) throw DomainError("from_matrix_gf_p: ragged columns");
    auto& r = reduced.emplace_back();
    for (auto v : c) r.push_back(((v % static_cast<long>(p)) + p) % p);
  }
  const unsigned rank = column_rank(reduced, full_mask(ground_size), rows, p);
  std::vector<Mask> bases;
  for_each_subset_of_size(ground_size, rank, [&](Mask m) {
    if (column_rank(reduced, m, rows, p) == rank) bases.push_back(m);
  });
  return Matroid(ground_size, std::move(bases));
}

Matroid Matroid::direct_sum(const Matroid& first, const Matroid& second) {
  const unsigned ground_size = first.ground_size_ + second.ground_size_;
  require_ground_size(ground_size);
  std::vector<Mask> bases;
  bases.reserve(first.bases_.size() * second.bases_.size());
  for (auto b : first.bases_) {
    for (auto c : second.bases_) bases.push_back(static_cast<Mask>(b | (c << first.ground_size_)));
  }
  return Matroid(ground_size, std::move(bases));
}

void Matroid::require_ground(const ElementSet& set, const char* op) const {
  if (set.ground_size() != ground_size_) {
    throw MismatchError(std::string(op) + ": subset over ground size " + std::to_string(set.ground_size()) +
                        ", matroid has " + std::to_string(ground_size_));
  }
}

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  out.reserve(bases_.size());
  for (auto b : bases_) out.push_back(ElementSet::from_mask(ground_size_, b));
  return out;
}

bool Matroid::is_base(const ElementSet& set) const {
  require_ground(set, "is_base");
  return std::binary_search(bases_.begin(), bases_.end(), set.mask());
}

bool Matroid::is_independent(const ElementSet& set) const {
  require_ground(set, "is_independent");
  return kernels::active().any_superset(bases_, set.mask());
}

unsigned Matroid::rank(const ElementSet& set) const {
  require_ground(set, "rank");
  return kernels::active().max_intersection(bases_, set.mask());
}

ElementSet Matroid::closure(const ElementSet& set) const {
  require_ground(set, "closure");
  const auto& k = kernels::active();
  const unsigned base_rank = k.max_intersection(bases_, set.mask());
  Mask out = set.mask();
  for (unsigned x = 0; x < ground_size_; ++x) {
    const auto bit = static_cast<Mask>(1U << x);
    if ((out & bit) == 0 && k.max_intersection(bases_, static_cast<Mask>(set.mask() | bit)) == base_rank) out |= bit;
  }
  return ElementSet::from_mask(ground_size_, out);
}

ElementSet Matroid::loops() const { return closure(ElementSet::from_mask(ground_size_, 0)); }

std::vector<ElementSet> Matroid::circuits() const {
  const auto indep = independence_table(ground_size_, bases_);
  std::vector<ElementSet> out;
  for (std::uint32_t x = 1; x < indep.size(); ++x) {
    if (indep[x]) continue;
    bool minimal = true;
    for (std::uint32_t bits = x; bits != 0 && minimal; bits &= bits - 1) minimal = indep[x & ~(bits & -bits)];
    if (minimal) out.push_back(ElementSet::from_mask(ground_size_, x));
  }
  return out;
}

std::vector<ElementSet> Matroid::hyperplanes() const {
  if (rank_ == 0) throw DomainError("hyperplanes: matroid has rank 0");
  // Every independent set of size r-1 is a base minus one element, and every
  // hyperplane is the closure of such a set.
  std::vector<Mask> closed;
  for (auto b : bases_) {
    for (unsigned bits = b; bits != 0; bits &= bits - 1) {
      closed.push_back(closure(ElementSet::from_mask(ground_size_, b & ~(bits & -bits))).mask());
    }
  }
  sort_unique(closed);
  std::vector<ElementSet> out;
  for (auto h : closed) out.push_back(ElementSet::from_mask(ground_size_, h));
  return out;
}

Contraction Matroid::contract(const ElementSet& set) const {
  require_ground(set, "contract");
  const Mask a = set.mask();
  std::vector<unsigned> kept;
  for (unsigned x = 0; x < ground_size_; ++x) {
    if (((a >> x) & 1U) == 0) kept.push_back(x);
  }
  std::vector<Mask> meeting;
  const auto& k = kernels::active();
  k.filter_by_intersection(bases_, a, k.max_intersection(bases_, a), meeting);

  std::vector<Mask> minor_bases;
  minor_bases.reserve(meeting.size());
  for (auto j : meeting) {
    Mask dense = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (((j >> kept[i]) & 1U) != 0) dense |= static_cast<Mask>(1U << i);
    }
    minor_bases.push_back(dense);
  }
  const auto minor_size = static_cast<unsigned>(kept.size());
  return Contraction{Matroid(minor_size, std::move(minor_bases)), std::move(kept)};
}

ElementSet Contraction::lift(const ElementSet& minor_set, unsigned original_ground_size) const {
  if (minor_set.ground_size() != kept.size()) throw MismatchError("lift: subset is not over the minor");
  std::uint32_t mask = 0;
  for (auto i : minor_set.elements()) mask |= std::uint32_t{1} << kept[i];
  return ElementSet::from_mask(original_ground_size, mask);
}

ElementSet Contraction::project(const ElementSet& original_set) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (original_set.contains(kept[i])) mask |= std::uint32_t{1} << i;
  }
  return ElementSet::from_mask(static_cast<unsigned>(kept.size()), mask);
}

}  // namespace matroidsum
