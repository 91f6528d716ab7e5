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

// Inner loops over a matroid's base family.
//
// A base family is a flat array of 16-bit membership masks. Every query the
// library makes against it (rank, independence, contraction filtering, base
// weights) is one pass over that array, so each pass has a scalar reference
// implementation and, on x86-64, an AVX2 variant. The variant is chosen once
// at startup from CPUID; both must agree bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace matroidsum::kernels {

using BaseMask = std::uint16_t;

struct KernelTable {
  std::string_view name;

  // max over B of |B & set|; 0 for an empty family.
  unsigned (*max_intersection)(std::span<const BaseMask> bases, BaseMask set);

  // True iff some B contains `set`.
  bool (*any_superset)(std::span<const BaseMask> bases, BaseMask set);

  // Appends every B with |B & set| == count to `out`, preserving order.
  void (*filter_by_intersection)(std::span<const BaseMask> bases, BaseMask set, unsigned count,
                                 std::vector<BaseMask>& out);

  // Bit g of the result is set iff some B has sum_{i in B} weights[i] = g
  // (mod modulus). Requires weights[i] < modulus <= 64 and
  // weights.size() >= highest element index present.
  std::uint64_t (*weight_mask)(std::span<const BaseMask> bases, std::span<const std::uint8_t> weights,
                               unsigned modulus);
};

const KernelTable& scalar();

// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2();

// The table used by the library: AVX2 when available unless the environment
// variable MATROIDSUM_KERNELS=scalar is set at first use.
const KernelTable& active();

}  // namespace matroidsum::kernels
