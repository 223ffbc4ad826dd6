// Copyright 2026 The spinde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "spinde/kernels.hpp"

namespace spinde::kernels {

#if defined(SPINDE_HAVE_AVX2_TU)
const KernelTable& avx2_table();
#endif
#if defined(SPINDE_HAVE_NEON_TU)
const KernelTable& neon_table();
#endif

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> tables{&scalar_table()};
#if defined(SPINDE_HAVE_AVX2_TU)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) tables.push_back(&avx2_table());
#endif
#if defined(SPINDE_HAVE_NEON_TU)
  tables.push_back(&neon_table());
#endif
  return tables;
}

namespace {

const KernelTable& select() {
  auto tables = available_tables();
  if (const char* forced = std::getenv("SPINDE_SIMD")) {
    for (const KernelTable* t : tables)
      if (t->name == std::string_view(forced)) return *t;
    return scalar_table();
  }
  return *tables.back();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace spinde::kernels
