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

// Compiled with -mavx2 only; callers must check the CPU before use.

#include <immintrin.h>

#include "spinde/kernels.hpp"

namespace spinde::kernels {
namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // mul then add, not fmadd: must round like the scalar loop.
    __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4),
                                             _mm256_loadu_pd(y + i + 4)));
  }
  if (i + 4 <= n) {
    acc0 = _mm256_add_pd(
        acc0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    i += 4;
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double signed_dot_avx2(const double* x, const signed char* s, std::size_t n) {
  // Flip the sign bit of x where s is negative.
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d mask = _mm256_set_pd(s[i + 3] < 0 ? -0.0 : 0.0,
                                 s[i + 2] < 0 ? -0.0 : 0.0,
                                 s[i + 1] < 0 ? -0.0 : 0.0,
                                 s[i] < 0 ? -0.0 : 0.0);
    __m256d v = _mm256_xor_pd(_mm256_loadu_pd(x + i),
                              _mm256_and_pd(mask, sign_bit));
    acc = _mm256_add_pd(acc, v);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += s[i] > 0 ? x[i] : -x[i];
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", axpy_avx2, dot_avx2,
                                 signed_dot_avx2};
  return table;
}

}  // namespace spinde::kernels
