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

// AArch64 only. Advanced SIMD is mandatory there, so no runtime probe.

#include <arm_neon.h>

#include "spinde/kernels.hpp"

namespace spinde::kernels {
namespace {

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t prod = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

double signed_dot_neon(const double* x, const signed char* s, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const double lanes[2] = {s[i] > 0 ? 1.0 : -1.0, s[i + 1] > 0 ? 1.0 : -1.0};
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(x + i), vld1q_f64(lanes)));
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += s[i] > 0 ? x[i] : -x[i];
  return total;
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{"neon", axpy_neon, dot_neon,
                                 signed_dot_neon};
  return table;
}

}  // namespace spinde::kernels
