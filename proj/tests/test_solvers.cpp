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

#include "doctest.h"
#include "spinde/assembly.hpp"
#include "spinde/bundled.hpp"
#include "spinde/error.hpp"
#include "spinde/solvers.hpp"
#include "test_util.hpp"

using namespace spinde;
using namespace spinde::testing;

namespace {

IsingModel fields(std::initializer_list<double> h) {
  IsingModel m;
  m.h = Eigen::VectorXd(static_cast<Eigen::Index>(h.size()));
  Eigen::Index i = 0;
  for (double v : h) m.h(i++) = v;
  m.J = Eigen::MatrixXd::Zero(m.h.size(), m.h.size());
  return m;
}

AnnealParams quick(std::uint64_t seed, int reads = 200, int sweeps = 1000) {
  AnnealParams p;
  p.seed = seed;
  p.n_reads = reads;
  p.n_sweeps = sweeps;
  return p;
}

}  // namespace

TEST_CASE("exact solver examples") {
  const auto r = solve_exact(fields({1.0, -2.0}));
  CHECK(r.best_spins == Spins{-1, 1});
  CHECK(r.best_energy == -3.0);

  IsingModel ferro;
  ferro.J = Eigen::Matrix2d{{0, -1}, {-1, 0}};
  ferro.h = Eigen::Vector2d::Zero();
  const auto f = solve_exact(ferro);
  CHECK(f.best_energy == -2.0);
  CHECK(f.best_spins == Spins{-1, -1});
}

TEST_CASE("exact ground state beats random assignments") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 5; ++t) {
    const auto m = random_model(rng, 14);
    const auto r = solve_exact(m);
    CHECK(close_rel(energy(m, r.best_spins), r.best_energy, 1e-12));
    for (int i = 0; i < 1000; ++i)
      CHECK(r.best_energy <= energy(m, random_spins(rng, 14)) + 1e-12);
  }
}

TEST_CASE("exact solver matches naive enumeration including ties") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    auto m = random_model(rng, n);
    // Integer couplings create plenty of degenerate ground states.
    m.J = m.J.array().round();
    m.h = m.h.array().round();
    double best = 1e300;
    std::uint64_t arg = 0;
    for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
      const double e = energy(m, spins_from_code(code, n));
      if (e < best - 1e-12) best = e, arg = code;
    }
    const auto r = solve_exact(m);
    CHECK(r.best_energy == doctest::Approx(best));
    CHECK(r.best_spins == spins_from_code(arg, n));
  }
}

TEST_CASE("exact solver refuses models above the cap") {
  std::mt19937_64 rng(1);
  const auto m = random_model(rng, 10);
  CHECK_THROWS_AS(solve_exact(m, 9), CapabilityError);
  CHECK_NOTHROW(solve_exact(m, 10));
}

TEST_CASE("metropolis delta matches the energy difference") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const auto m = random_model(rng, n);
    Spins s = random_spins(rng, n);
    const auto g = local_fields(m, s);
    const std::size_t i = rng() % n;
    const double before = energy(m, s);
    const double delta = flip_delta(s[i], g[i]);
    s[i] = static_cast<Spin>(-s[i]);
    CHECK(std::abs(energy(m, s) - before - delta) <= 1e-12 * std::max(1.0, std::abs(before)));
  }
}

TEST_CASE("simulated annealing") {
  SUBCASE("field-only models reach the ground state on every read") {
    const auto m = fields({0.3, -1.0, 2.0, -0.01, 0.5});
    const auto r = solve_sa(m, quick(4, 50, 100));
    REQUIRE(r.energy_histogram.size() == 1);
    CHECK(r.energy_histogram[0].second == 50);
    CHECK(r.best_spins == Spins{-1, 1, -1, 1, -1});
  }
  SUBCASE("deterministic for a fixed seed") {
    std::mt19937_64 rng(6);
    const auto m = random_model(rng, 12);
    const auto a = solve_sa(m, quick(42, 20, 200));
    const auto b = solve_sa(m, quick(42, 20, 200));
    CHECK(a.best_spins == b.best_spins);
    CHECK(a.best_energy == b.best_energy);
    CHECK(a.energy_histogram == b.energy_histogram);
  }
  SUBCASE("result invariants") {
    std::mt19937_64 rng(9);
    const auto m = random_model(rng, 16);
    const auto r = solve_sa(m, quick(1, 30, 300));
    CHECK(close_rel(energy(m, r.best_spins), r.best_energy, 1e-9));
    int total = 0;
    for (const auto& [e, c] : r.energy_histogram) {
      CHECK(r.best_energy <= e + 1e-12);
      total += c;
    }
    CHECK(total == 30);
    CHECK(r.best_energy >= solve_exact(m).best_energy - 1e-9);
  }
  SUBCASE("matches the exact ground state on bundled laguerre models") {
    int hits = 0, trials = 0;
    for (int n = 3; n <= 6; ++n) {
      const auto ex = laguerre_example(n);
      const auto& p = ex.problem;
      const auto ql = assemble_loss(p.equations, p.basis, p.n_out);
      const SpinEncoding enc(p.hyper.centers_for(ql.size()), p.hyper.scales_for(ql.size()), 3);
      const auto m = build_ising(ql, enc);
      const double ground = solve_exact(m).best_energy;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto r = solve_sa(m, quick(seed));
        CHECK(r.best_energy >= ground - 1e-9 * (1 + std::abs(ground)));
        hits += close_rel(r.best_energy, ground, 1e-9) ? 1 : 0;
        ++trials;
      }
    }
    CHECK(hits == trials);
  }
}

TEST_CASE("anneal parameter validation") {
  AnnealParams p;
  p.n_reads = 0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = AnnealParams{};
  p.beta_initial = 2.0;
  p.beta_final = 1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p.beta_initial = -1.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
}

TEST_CASE("per-read seeds differ") {
  CHECK(read_seed(0, 0) != read_seed(0, 1));
  CHECK(read_seed(1, 0) != read_seed(0, 0));
  CHECK(read_seed(5, 7) == read_seed(5, 7));
}
