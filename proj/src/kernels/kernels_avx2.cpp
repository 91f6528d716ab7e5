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
#include <array>
#include <bit>

#include "kernels_internal.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace matroidsum::kernels {

#if defined(__AVX2__)
namespace {

constexpr std::size_t kLanes = 16;

inline __m256i load16(const BaseMask* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

// Per-lane popcount of 16-bit lanes: nibble lookup, then pairwise byte add.
inline __m256i popcount_epi16(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
}

unsigned max_intersection_avx2(std::span<const BaseMask> bases, BaseMask set) {
  const std::size_t n = bases.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256i s = _mm256_set1_epi16(static_cast<short>(set));
  __m256i best = _mm256_setzero_si256();
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    best = _mm256_max_epu16(best, popcount_epi16(_mm256_and_si256(load16(&bases[i]), s)));
  }
  alignas(32) std::array<std::uint16_t, kLanes> lanes;
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), best);
  unsigned result = *std::max_element(lanes.begin(), lanes.end());
  for (std::size_t i = vec_end; i < n; ++i) {
    result = std::max(result, static_cast<unsigned>(std::popcount(static_cast<unsigned>(bases[i] & set))));
  }
  return result;
}

bool any_superset_avx2(std::span<const BaseMask> bases, BaseMask set) {
  const std::size_t n = bases.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256i s = _mm256_set1_epi16(static_cast<short>(set));
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256i hit = _mm256_cmpeq_epi16(_mm256_and_si256(load16(&bases[i]), s), s);
    if (_mm256_movemask_epi8(hit) != 0) return true;
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    if ((bases[i] & set) == set) return true;
  }
  return false;
}

void filter_by_intersection_avx2(std::span<const BaseMask> bases, BaseMask set, unsigned count,
                                 std::vector<BaseMask>& out) {
  const std::size_t n = bases.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256i s = _mm256_set1_epi16(static_cast<short>(set));
  const __m256i want = _mm256_set1_epi16(static_cast<short>(count));
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256i hit = _mm256_cmpeq_epi16(popcount_epi16(_mm256_and_si256(load16(&bases[i]), s)), want);
    // Two mask bits per 16-bit lane; keep the even ones.
    auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(hit)) & 0x55555555U;
    while (bits != 0) {
      out.push_back(bases[i + static_cast<std::size_t>(std::countr_zero(bits)) / 2]);
      bits &= bits - 1;
    }
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    if (static_cast<unsigned>(std::popcount(static_cast<unsigned>(bases[i] & set))) == count) {
      out.push_back(bases[i]);
    }
  }
}

std::uint64_t weight_mask_avx2(std::span<const BaseMask> bases, std::span<const std::uint8_t> weights,
                               unsigned modulus) {
  const std::size_t n = bases.size();
  const std::size_t vec_end = n - n % kLanes;
  const std::size_t elements = std::min<std::size_t>(weights.size(), 16);
  const __m256i mod = _mm256_set1_epi16(static_cast<short>(modulus));
  __m256i bit[16];
  __m256i weight[16];
  for (std::size_t e = 0; e < elements; ++e) {
    bit[e] = _mm256_set1_epi16(static_cast<short>(1U << e));
    weight[e] = _mm256_set1_epi16(static_cast<short>(weights[e]));
  }
  std::uint64_t out = 0;
  alignas(32) std::array<std::uint16_t, kLanes> lanes;
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256i v = load16(&bases[i]);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t e = 0; e < elements; ++e) {
      const __m256i sel = _mm256_cmpeq_epi16(_mm256_and_si256(v, bit[e]), bit[e]);
      acc = _mm256_add_epi16(acc, _mm256_and_si256(sel, weight[e]));
      // acc < 2*modulus here; acc - modulus wraps above acc when acc < modulus.
      acc = _mm256_min_epu16(acc, _mm256_sub_epi16(acc, mod));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
    for (auto g : lanes) out |= std::uint64_t{1} << g;
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    unsigned sum = 0;
    for (unsigned bits = bases[i]; bits != 0; bits &= bits - 1) {
      sum += weights[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    out |= std::uint64_t{1} << (sum % modulus);
  }
  return out;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", max_intersection_avx2, any_superset_avx2,
                                 filter_by_intersection_avx2, weight_mask_avx2};
  return &table;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace matroidsum::kernels
