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

// The AVX2 kernels must agree with the scalar reference on every input.

#include <doctest.h>

#include <bit>
#include <random>

#include "matroidsum/kernels.hpp"

namespace k = matroidsum::kernels;

namespace {

std::vector<k::BaseMask> random_family(std::mt19937_64& rng, std::size_t count, unsigned ground) {
  std::vector<k::BaseMask> out(count);
  const unsigned full = (1U << ground) - 1;
  for (auto& b : out) b = static_cast<k::BaseMask>(rng() & full);
  return out;
}

}  // namespace

TEST_CASE("scalar kernels on hand-built families") {
  const auto& s = k::scalar();
  const std::vector<k::BaseMask> bases{0b0011, 0b0101, 0b1001};
  CHECK(s.max_intersection(bases, 0b0001) == 1);
  CHECK(s.max_intersection(bases, 0b0110) == 1);
  CHECK(s.max_intersection(bases, 0b1111) == 2);
  CHECK(s.max_intersection({}, 0b1111) == 0);
  CHECK(s.any_superset(bases, 0b0011));
  CHECK_FALSE(s.any_superset(bases, 0b0110));

  std::vector<k::BaseMask> out;
  s.filter_by_intersection(bases, 0b0010, 0, out);
  CHECK(out == std::vector<k::BaseMask>{0b0101, 0b1001});

  const std::vector<std::uint8_t> w{0, 0, 1, 3};
  CHECK(s.weight_mask(bases, w, 7) == 0b1011);  // {0, 1, 3}
}

TEST_CASE("active table is one of the two") {
  const auto& a = k::active();
  CHECK((a.name == "scalar" || a.name == "avx2"));
}

TEST_CASE("avx2 matches scalar") {
  const auto* v = k::avx2();
  if (v == nullptr) {
    MESSAGE("AVX2 unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto& s = k::scalar();
  std::mt19937_64 rng(7);
  // Sizes straddle the 16-lane block so both the vector body and the tail run.
  for (std::size_t count : {0, 1, 15, 16, 17, 31, 32, 33, 100, 1000}) {
    for (int iter = 0; iter < 40; ++iter) {
      const unsigned ground = 1 + static_cast<unsigned>(rng() % 16);
      const auto bases = random_family(rng, count, ground);
      const auto set = static_cast<k::BaseMask>(rng() & ((1U << ground) - 1));

      CHECK(v->max_intersection(bases, set) == s.max_intersection(bases, set));
      CHECK(v->any_superset(bases, set) == s.any_superset(bases, set));
      if (!bases.empty()) {
        CHECK(v->any_superset(bases, bases[rng() % bases.size()]));
      }

      const unsigned want = static_cast<unsigned>(rng() % (ground + 1));
      std::vector<k::BaseMask> a;
      std::vector<k::BaseMask> b;
      v->filter_by_intersection(bases, set, want, a);
      s.filter_by_intersection(bases, set, want, b);
      CHECK(a == b);

      const unsigned modulus = 1 + static_cast<unsigned>(rng() % 64);
      std::vector<std::uint8_t> weights(ground);
      for (auto& w : weights) w = static_cast<std::uint8_t>(rng() % modulus);
      CHECK(v->weight_mask(bases, weights, modulus) == s.weight_mask(bases, weights, modulus));
    }
  }
}

TEST_CASE("avx2 popcount covers every 16-bit value") {
  const auto* v = k::avx2();
  if (v == nullptr) return;
  std::vector<k::BaseMask> all(1 << 16);
  for (unsigned i = 0; i < all.size(); ++i) all[i] = static_cast<k::BaseMask>(i);
  for (unsigned c = 0; c <= 16; ++c) {
    std::vector<k::BaseMask> out;
    v->filter_by_intersection(all, 0xffff, c, out);
    std::size_t expected = 0;
    for (unsigned i = 0; i < all.size(); ++i) expected += std::popcount(i) == static_cast<int>(c);
    CHECK(out.size() == expected);
  }
  CHECK(v->max_intersection(all, 0xffff) == 16);
}
