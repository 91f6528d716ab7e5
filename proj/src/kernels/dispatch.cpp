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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace matroidsum::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select() {
  const char* forced = std::getenv("MATROIDSUM_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return scalar();
  if (const auto* table = avx2()) return *table;
  return scalar();
}

}  // namespace

const KernelTable* avx2() { return cpu_has_avx2() ? avx2_table() : nullptr; }

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace matroidsum::kernels
