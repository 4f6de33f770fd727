// Copyright 2026 The sublocal Authors
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
#include <vector>

#include "kernels_internal.hpp"

namespace sublocal::kernels {
namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar_kernels()};
#if defined(SUBLOCAL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    tables.push_back(&avx2_kernels());
  }
#endif
#if defined(SUBLOCAL_HAVE_NEON)
  // Advanced SIMD is mandatory on AArch64.
  tables.push_back(&neon_kernels());
#endif
  return tables;
}

const std::vector<const KernelTable*>& registry() {
  static const std::vector<const KernelTable*> tables = detect();
  return tables;
}

}  // namespace

std::span<const KernelTable* const> available_kernels() { return registry(); }

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const auto& tables = registry();
    if (const char* env = std::getenv("SUBLOCAL_KERNELS")) {
      const std::string_view wanted{env};
      for (const KernelTable* t : tables) {
        if (t->name == wanted) return t;
      }
    }
    return tables.back();
  }();
  return *chosen;
}

}  // namespace sublocal::kernels
