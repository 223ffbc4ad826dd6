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

#include <random>
#include <vector>

#include "doctest.h"
#include "spinde/kernels.hpp"

using spinde::kernels::available_tables;
using spinde::kernels::KernelTable;
using spinde::kernels::scalar_table;

namespace {

std::vector<double> random_doubles(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar table is always available and first") {
  const auto tables = available_tables();
  REQUIRE(!tables.empty());
  CHECK(tables.front()->name == "scalar");
  MESSAGE("active kernel: " << spinde::kernels::active().name);
}

TEST_CASE("scalar reference kernels on hand values") {
  const KernelTable& k = scalar_table();
  std::vector<double> x{1, 2, 3}, y{10, 20, 30};
  k.axpy(2.0, x.data(), y.data(), 3);
  CHECK(y == std::vector<double>{12, 24, 36});
  CHECK(k.dot(x.data(), y.data(), 3) == doctest::Approx(12 + 48 + 108));
  const signed char s[3] = {1, -1, 1};
  CHECK(k.signed_dot(x.data(), s, 3) == 2.0);
  CHECK(k.dot(x.data(), y.data(), 0) == 0.0);
}

TEST_CASE("every SIMD variant matches the scalar reference") {
  std::mt19937_64 rng(7);
  const KernelTable& ref = scalar_table();
  for (const KernelTable* t : available_tables()) {
    CAPTURE(t->name);
    for (std::size_t n = 0; n < 70; ++n) {
      CAPTURE(n);
      const auto x = random_doubles(rng, n);
      auto y_ref = random_doubles(rng, n);
      auto y_simd = y_ref;
      const double a = random_doubles(rng, 1)[0];
      ref.axpy(a, x.data(), y_ref.data(), n);
      t->axpy(a, x.data(), y_simd.data(), n);
      // Bit-identical: the SIMD axpy must not fuse or reorder.
      CHECK(y_simd == y_ref);

      const double d_ref = ref.dot(x.data(), y_ref.data(), n);
      const double d_simd = t->dot(x.data(), y_ref.data(), n);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y_ref[i]);
      CHECK(std::abs(d_ref - d_simd) <= 1e-14 * (mag + 1.0));

      std::vector<signed char> s(n);
      for (auto& v : s) v = (rng() & 1) ? 1 : -1;
      double abs_sum = 0.0;
      for (double v : x) abs_sum += std::abs(v);
      CHECK(std::abs(ref.signed_dot(x.data(), s.data(), n) -
                     t->signed_dot(x.data(), s.data(), n)) <=
            1e-14 * (abs_sum + 1.0));
    }
  }
}

TEST_CASE("misaligned views agree too") {
  std::mt19937_64 rng(11);
  auto buf_x = random_doubles(rng, 41);
  auto buf_y = random_doubles(rng, 41);
  for (const KernelTable* t : available_tables()) {
    auto y_ref = buf_y, y_simd = buf_y;
    scalar_table().axpy(0.37, buf_x.data() + 1, y_ref.data() + 3, 37);
    t->axpy(0.37, buf_x.data() + 1, y_simd.data() + 3, 37);
    CHECK(y_ref == y_simd);
  }
}
