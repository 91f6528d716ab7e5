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

// Runtime verifiers for the base-weight bound and its equality cases, the
// contraction lemmas they rest on, and the classical sumset corollaries.
//
// Each verifier evaluates a claim on one instance and reports what it
// found. None of them throws on a false claim; a false flag is a
// counterexample for the caller to record.

#include <optional>
#include <vector>

#include "matroidsum/cyclic_sets.hpp"
#include "matroidsum/matroid.hpp"
#include "matroidsum/weighting.hpp"

namespace matroidsum {

struct MainVerdict {
  unsigned bound = 0;
  unsigned weight_count = 0;
  bool pollard_ok = false;
  bool inequality_holds = false;
  bool is_equality = false;
  // r(M) = 1 or M^w is an arithmetic progression.
  bool case_i = false;
  // Some hyperplane H and g give M^w = g + (M/H)^w.
  bool case_ii = false;
  std::optional<ElementSet> witness_hyperplane;
  std::optional<GroupElement> witness_shift;

  // Inequality holds and, at equality, one of the two cases applies.
  // Vacuously true when the Pollard condition fails.
  bool consistent() const { return !pollard_ok || (inequality_holds && (!is_equality || case_i || case_ii)); }
};

struct CheckOptions {
  // Adds one to every computed bound. Used to prove the harness catches
  // violations.
  bool fault_inject = false;
};

// Throws DomainError when r(M) = 0. When the Pollard condition on w(E)
// fails the verdict has pollard_ok = false and only bound and weight_count
// are filled in.
MainVerdict check_main(const WeightedMatroid& wm, CheckOptions options = {});

// (M/u)^w + G_u is contained in M^w. Throws DomainError if u is a loop or
// out of range.
bool check_ss_lemma(const WeightedMatroid& wm, unsigned u);

// check_ss_lemma for every non-loop element; returns the first failing one.
std::optional<unsigned> first_ss_lemma_failure(const WeightedMatroid& wm);

// M/U and M/cl(U) have the same bases, and (M/U)/V = M/(U + V), with base
// families compared as subsets of the original ground set. Throws
// DomainError when U and V overlap.
bool check_contraction_identities(const Matroid& m, const ElementSet& u, const ElementSet& v);

// Both identities for every disjoint pair (U, V) of subsets of E.
bool check_all_contraction_identities(const Matroid& m);

struct ChowlaVerdict {
  bool applicable = false;
  unsigned bound = 0;     // min(n, |A| + |B| - 1)
  unsigned sum_size = 0;  // |A + B|
  bool inequality_holds = false;
  bool equality = false;  // |A + B| = |A| + |B| - 1 <= n
  bool is_ap = false;     // A + B is an arithmetic progression
  // equality implies is_ap
  bool ap_consistent = false;

  bool consistent() const { return !applicable || (inequality_holds && ap_consistent); }
};

// Requires |A|, |B| >= 2 (DomainError otherwise).
ChowlaVerdict check_chowla_kemperman(const GroupSet& a, const GroupSet& b, CheckOptions options = {});

struct VosperVerdict {
  bool applicable = false;  // |A + B| = |A| + |B| - 1 < p
  unsigned sum_size = 0;
  bool case_complement = false;  // c - A = Z_p \ B for some c
  bool case_ap = false;          // A and B are progressions with a common difference
  std::optional<GroupElement> witness_c;
  std::optional<GroupElement> witness_d;

  bool consistent() const { return !applicable || case_complement || case_ap; }
};

// Requires a prime modulus and |A|, |B| >= 2 (DomainError otherwise).
VosperVerdict check_vosper(const GroupSet& a, const GroupSet& b);

struct SequenceInstance {
  CyclicGroup group;
  std::vector<GroupElement> terms;
};

SequenceInstance make_sequence(CyclicGroup group, const std::vector<long>& terms);

// n indices (ascending) whose terms sum to 0 mod n, or nullopt if none
// exists. Throws DomainError unless |terms| = 2n - 1.
std::optional<std::vector<unsigned>> egz_witness(const SequenceInstance& s);

// True iff no residue appears n or more times, the precondition of the
// matroid route below.
bool egz_matroid_route_applies(const SequenceInstance& s);

// Builds U_n on the 2n - 1 terms with w(i) = terms[i] and checks that the
// bound equals n and M^w = Z_n. Throws DomainError when the length or the
// repetition precondition fails.
bool check_egz_via_matroid(const SequenceInstance& s);

}  // namespace matroidsum
