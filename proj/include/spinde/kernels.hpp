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

#pragma once

// Dense double-precision kernels used by the inner loops of assembly and the
// Ising solvers. Each kernel has a portable scalar reference implementation
// and, where the CPU supports it, a SIMD variant. The variant is picked once
// at startup; SPINDE_SIMD=scalar|avx2|neon in the environment overrides it.
//
// axpy is required to be bit-identical across variants (no fused
// multiply-add); dot may differ in the last bits because the SIMD variants
// reassociate the sum.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace spinde::kernels {

struct KernelTable {
  std::string_view name;
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] = x[i] * s[i] with s in {-1, +1} stored as signed char
  double (*signed_dot)(const double* x, const signed char* s, std::size_t n);
};

const KernelTable& scalar_table();

// Every variant compiled into this binary that the running CPU can execute,
// scalar first.
std::vector<const KernelTable*> available_tables();

// The table selected for this process.
const KernelTable& active();

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), y.size());
}

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

// sum_i x[i] * s[i] for a spin vector s.
inline double signed_dot(std::span<const double> x,
                         std::span<const signed char> s) {
  return active().signed_dot(x.data(), s.data(), x.size());
}

}  // namespace spinde::kernels
