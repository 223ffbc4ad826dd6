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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spinde/encoding.hpp"

namespace spinde {

struct AnnealParams {
  int n_reads = 200;
  int n_sweeps = 1000;
  // Unset inverse temperatures are derived from the model: 1 / max|coeff|
  // and 1000 / max|coeff|.
  std::optional<double> beta_initial;
  std::optional<double> beta_final;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SolveResult {
  Spins best_spins;
  double best_energy = 0.0;
  // (energy, count) in increasing energy; one entry per distinct read result.
  std::vector<std::pair<double, int>> energy_histogram;
};

constexpr int kDefaultExactSpinCap = 26;

// Global minimum by enumerating all 2^n states. Among degenerate minima the
// state with the smallest binary code wins, where spin i contributes bit i
// and -1 reads as 0.
SolveResult solve_exact(const IsingModel& model,
                        int spin_cap = kDefaultExactSpinCap);

// Metropolis simulated annealing with single-spin flips over a geometric
// inverse-temperature ladder, n_reads independent restarts.
SolveResult solve_sa(const IsingModel& model, const AnnealParams& params);

// Energy change of flipping spin i, from the local field
// g_i = h_i + 2 sum_j J_ij s_j.
inline double flip_delta(Spin s_i, double local_field) {
  return -2.0 * s_i * local_field;
}

std::vector<double> local_fields(const IsingModel& model,
                                 std::span<const Spin> spins);

// Seed of read r; reads are independent of each other and of thread count.
std::uint64_t read_seed(std::uint64_t seed, std::uint64_t read);

}  // namespace spinde
