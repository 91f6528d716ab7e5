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

#include <algorithm>
#include <bit>

#include "kernels_internal.hpp"

namespace matroidsum::kernels {
namespace {

unsigned max_intersection_scalar(std::span<const BaseMask> bases, BaseMask set) {
  unsigned best = 0;
  for (auto b : bases) {
    best = std::max(best, static_cast<unsigned>(std::popcount(static_cast<unsigned>(b & set))));
  }
  return best;
}

bool any_superset_scalar(std::span<const BaseMask> bases, BaseMask set) {
  return std::any_of(bases.begin(), bases.end(), [set](BaseMask b) { return (b & set) == set; });
}

void filter_by_intersection_scalar(std::span<const BaseMask> bases, BaseMask set, unsigned count,
                                   std::vector<BaseMask>& out) {
  for (auto b : bases) {
    if (static_cast<unsigned>(std::popcount(static_cast<unsigned>(b & set))) == count) out.push_back(b);
  }
}

std::uint64_t weight_mask_scalar(std::span<const BaseMask> bases, std::span<const std::uint8_t> weights,
                                 unsigned modulus) {
  std::uint64_t out = 0;
  for (auto b : bases) {
    unsigned sum = 0;
    for (unsigned bits = b; bits != 0; bits &= bits - 1) {
      sum += weights[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    out |= std::uint64_t{1} << (sum % modulus);
  }
  return out;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", max_intersection_scalar, any_superset_scalar,
                                 filter_by_intersection_scalar, weight_mask_scalar};
  return table;
}

}  // namespace matroidsum::kernels
