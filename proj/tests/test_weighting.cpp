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

#include <doctest.h>

#include "matroidsum/weighting.hpp"
#include "test_support.hpp"

using namespace matroidsum;
using testing_support::element_set;
using testing_support::to_family;
using testing_support::to_set;

namespace {

const CyclicGroup Z2(2);
const CyclicGroup Z5(5);
const CyclicGroup Z7(7);

Matroid parallel_class() {
  return Matroid::from_bases(4, {ElementSet(4, {0, 1}), ElementSet(4, {0, 2}), ElementSet(4, {0, 3})});
}

// U_1(A) + U_1(B) with w(x, i) = x.
WeightedMatroid pair_instance(const GroupSet& a, const GroupSet& b) {
  std::vector<long> w;
  for (auto x : a.members()) w.push_back(x);
  for (auto x : b.members()) w.push_back(x);
  return {Matroid::direct_sum(Matroid::uniform(a.size(), 1), Matroid::uniform(b.size(), 1)),
          WeightFunction(a.group(), w)};
}

}  // namespace

TEST_CASE("subset_weight") {
  const WeightFunction w2(Z2, {0, 0, 1});
  CHECK(subset_weight(w2, ElementSet::from_mask(3, 0)) == GroupElement(Z2, 0));
  CHECK(subset_weight(w2, ElementSet(3, {0, 2})) == GroupElement(Z2, 1));
  const WeightFunction w5(Z5, {1, 2, 3});
  CHECK(subset_weight(w5, ElementSet::all(3)) == GroupElement(Z5, 1));
  CHECK_THROWS_AS(subset_weight(w5, ElementSet::all(4)), MismatchError);
}

TEST_CASE("base_weight_set") {
  SUBCASE("U_1(A) + U_1(B) recovers A + B") {
    const GroupSet a(Z7, {0, 2, 3});
    const GroupSet b(Z7, {1, 5});
    CHECK(base_weight_set(pair_instance(a, b)) == sumset(a, b));
  }
  SUBCASE("U_2 on three elements over Z_2") {
    CHECK(oracle::base_weights(2, {{0, 1}, {0, 2}, {1, 2}}, {0, 0, 1}) == oracle::Set{0, 1});
    const WeightedMatroid wm(Matroid::uniform(3, 2), WeightFunction(Z2, {0, 0, 1}));
    CHECK(base_weight_set(wm) == GroupSet(Z2, {0, 1}));
  }
  SUBCASE("rank one gives the image of the non-loops") {
    const WeightedMatroid wm(Matroid::uniform(4, 1), WeightFunction(Z7, {3, 3, 6, 1}));
    CHECK(base_weight_set(wm) == wm.weights().image());
    // The zero column is a loop and its weight does not appear.
    const WeightedMatroid with_loop(Matroid::from_matrix_gf_p(2, {{1}, {0}, {1}}), WeightFunction(Z7, {3, 5, 4}));
    CHECK(base_weight_set(with_loop) == GroupSet(Z7, {3, 4}));
  }
}

TEST_CASE("fibers") {
  const auto f = fibers(WeightFunction(Z2, {0, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == ElementSet(3, {0, 1}));
  CHECK(f[1] == ElementSet(3, {2}));

  const auto constant = fibers(WeightFunction(Z5, {4, 4, 4}));
  CHECK(constant[4] == ElementSet::all(3));
  for (unsigned g = 0; g < 4; ++g) CHECK(constant[g].empty());

  for (const auto& s : fibers(WeightFunction(Z7, {0, 3, 6, 2}))) CHECK(s.size() <= 1);
}

TEST_CASE("ss_bound") {
  SUBCASE("EGZ instance U_p on 2p-1 elements") {
    // No residue repeated p times: each fiber is independent in U_p.
    const WeightedMatroid wm(Matroid::uniform(9, 5), WeightFunction(Z5, {0, 0, 1, 1, 2, 2, 3, 4, 4}));
    CHECK(ss_bound(wm) == 5);
  }
  SUBCASE("U_1(A) + U_1(B), A = B = {0, 1} in Z_5") {
    const auto wm = pair_instance(GroupSet(Z5, {0, 1}), GroupSet(Z5, {0, 1}));
    // Fibers {0, 2} and {1, 3} each have rank 2 (one element per block).
    CHECK(oracle::rank(to_family(wm.matroid()), {0, 2}) == 2);
    CHECK(oracle::rank(to_family(wm.matroid()), {1, 3}) == 2);
    CHECK(ss_bound(wm) == 3);
  }
  SUBCASE("loop-free rank one counts distinct weights") {
    const WeightedMatroid wm(Matroid::uniform(5, 1), WeightFunction(Z7, {1, 1, 4, 6, 4}));
    CHECK(ss_bound(wm) == 3);
  }
  CHECK_THROWS_AS(ss_bound(WeightedMatroid(Matroid::uniform(2, 0), WeightFunction(Z5, {1, 2}))), DomainError);
  CHECK_THROWS_AS(WeightedMatroid(Matroid::uniform(2, 1), WeightFunction(Z5, {1, 2, 3})), MismatchError);
}

TEST_CASE("neighborhood_weights") {
  const WeightedMatroid wm(parallel_class(), WeightFunction(Z7, {0, 0, 1, 3}));
  // Oracle: closures of the fibers {a, b}, {c}, {d}.
  const auto bases = to_family(wm.matroid());
  CHECK(oracle::closure(4, bases, {0, 1}) == oracle::Set{0, 1, 2, 3});
  CHECK(oracle::closure(4, bases, {2}).count(1) == 1);
  CHECK(oracle::closure(4, bases, {3}).count(1) == 1);
  CHECK(neighborhood_weights(wm, 1) == GroupSet(Z7, {0, 1, 3}));

  const WeightedMatroid looped(Matroid::from_matrix_gf_p(2, {{1}, {0}, {1}}), WeightFunction(Z5, {1, 2, 3}));
  CHECK(neighborhood_weights(looped, 1) == GroupSet::full(Z5));
  CHECK_THROWS_AS(neighborhood_weights(looped, 3), DomainError);
}

TEST_CASE("properties on random weighted matroids") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 400; ++iter) {
    const auto m = testing_support::random_matroid(rng, 6);
    const unsigned n = 1 + static_cast<unsigned>(rng() % 9);
    const CyclicGroup group(n);
    std::vector<long> w(m.ground_size());
    std::vector<int> wi(m.ground_size());
    for (std::size_t i = 0; i < w.size(); ++i) wi[i] = static_cast<int>(w[i] = static_cast<long>(rng() % n));
    const WeightedMatroid wm(m, WeightFunction(group, w));
    const auto weights = base_weight_set(wm);
    CAPTURE(iter);

    CHECK(to_set(weights) == oracle::base_weights(static_cast<int>(n), to_family(m), wi));
    CHECK_FALSE(weights.empty());

    const auto fs = fibers(wm.weights());
    ElementSet all = ElementSet::from_mask(m.ground_size(), 0);
    for (const auto& f : fs) {
      CHECK((all & f).empty());
      all = all | f;
    }
    CHECK(all == m.ground());
    CHECK(fiber_rank_sum(wm) >= m.rank());

    if (m.rank() >= 1) {
      CHECK(ss_bound(wm) >= 1);
      // Adding c to every weight shifts M^w by r(M) c and keeps the bound.
      const GroupElement c(group, static_cast<long>(rng() % n));
      const WeightedMatroid shifted(m, wm.weights().shifted(c));
      CHECK(base_weight_set(shifted) == translate(weights, GroupElement(group, static_cast<long>(m.rank()) * c.value())));
      CHECK(ss_bound(shifted) == ss_bound(wm));
    }

    const auto loops = m.loops();
    for (unsigned u = 0; u < m.ground_size(); ++u) {
      const auto g_u = neighborhood_weights(wm, u);
      if (loops.contains(u)) {
        CHECK(g_u == GroupSet::full(group));
        continue;
      }
      CHECK(g_u.contains(wm.weights()(u)));
      // (M/u)^w + G_u inside M^w.
      const auto minor = contract(wm, ElementSet::from_elements(m.ground_size(), {u}));
      CHECK(sumset(base_weight_set(minor.minor), g_u).is_subset_of(weights));
    }
  }
}
