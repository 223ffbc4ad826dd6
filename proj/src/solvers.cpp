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

#include "spinde/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "spinde/error.hpp"
#include "spinde/kernels.hpp"

namespace spinde {
namespace {

double max_abs_coeff(const IsingModel& m) {
  double mx = 0.0;
  if (m.J.size() > 0) mx = m.J.cwiseAbs().maxCoeff();
  if (m.h.size() > 0) mx = std::max(mx, m.h.cwiseAbs().maxCoeff());
  return mx;
}

double coeff_scale(const IsingModel& m) {
  return m.J.cwiseAbs().sum() + m.h.cwiseAbs().sum();
}

// Flip spin i and update all local fields. J has a zero diagonal, so g_i is
// unaffected.
void flip(const IsingModel& model, Spins& s, std::vector<double>& g,
          std::size_t i) {
  s[i] = static_cast<Spin>(-s[i]);
  kernels::axpy(4.0 * s[i],
                {model.J.col(static_cast<Eigen::Index>(i)).data(), g.size()},
                g);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::pair<double, int>> histogram(const std::vector<double>& es) {
  std::map<double, int> counts;
  for (double e : es) ++counts[e];
  return {counts.begin(), counts.end()};
}

}  // namespace

void AnnealParams::validate() const {
  if (n_reads < 1) throw ValidationError("n_reads must be >= 1");
  if (n_sweeps < 1) throw ValidationError("n_sweeps must be >= 1");
  if (beta_initial && !(*beta_initial > 0.0))
    throw ValidationError("beta_initial must be positive");
  if (beta_final && !(*beta_final > 0.0))
    throw ValidationError("beta_final must be positive");
  if (beta_initial && beta_final && !(*beta_initial < *beta_final))
    throw ValidationError("beta_initial must be below beta_final");
}

std::vector<double> local_fields(const IsingModel& model,
                                 std::span<const Spin> spins) {
  const std::size_t n = model.num_spins();
  std::vector<double> g(model.h.data(), model.h.data() + n);
  for (std::size_t j = 0; j < n; ++j)
    kernels::axpy(2.0 * spins[j],
                  {model.J.col(static_cast<Eigen::Index>(j)).data(), n}, g);
  return g;
}

std::uint64_t read_seed(std::uint64_t seed, std::uint64_t read) {
  // splitmix64 of the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (read + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SolveResult solve_exact(const IsingModel& model, int spin_cap) {
  const std::size_t n = model.num_spins();
  if (static_cast<long long>(n) > spin_cap || n >= 63)
    throw CapabilityError("exact enumeration of " + std::to_string(n) +
                          " spins exceeds the cap of " +
                          std::to_string(spin_cap) +
                          "; use the simulated annealing backend");
  Spins s(n, -1);
  if (n == 0) return {s, 0.0, {{0.0, 1}}};

  // Gray-code walk: step k flips spin ctz(k). Energy and local fields are
  // refreshed from scratch periodically to stop rounding drift.
  constexpr std::uint64_t kResync = 4096;
  const double tie_tol = 1e-12 * std::max(coeff_scale(model), 1e-300);
  std::vector<double> g = local_fields(model, s);
  double e = energy(model, s);
  double best_e = e;
  std::uint64_t best_code = 0;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < states; ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    e += flip_delta(s[i], g[i]);
    flip(model, s, g, i);
    if (k % kResync == 0) {
      g = local_fields(model, s);
      e = energy(model, s);
    }
    const std::uint64_t code = k ^ (k >> 1);
    if (e < best_e - tie_tol) {
      best_e = e;
      best_code = code;
    } else if (e <= best_e + tie_tol && code < best_code) {
      best_e = std::min(best_e, e);
      best_code = code;
    }
  }
  Spins best(n);
  for (std::size_t i = 0; i < n; ++i)
    best[i] = (best_code >> i) & 1 ? Spin{1} : Spin{-1};
  const double be = energy(model, best);
  return {best, be, {{be, 1}}};
}

SolveResult solve_sa(const IsingModel& model, const AnnealParams& params) {
  params.validate();
  const std::size_t n = model.num_spins();
  const double mx = max_abs_coeff(model);
  const double unit = mx > 0.0 ? 1.0 / mx : 1.0;
  const double beta0 = params.beta_initial.value_or(unit);
  const double beta1 = params.beta_final.value_or(1000.0 * unit);
  if (!(beta0 < beta1))
    throw ValidationError("beta_initial must be below beta_final");

  std::vector<double> betas(static_cast<std::size_t>(params.n_sweeps));
  for (int t = 0; t < params.n_sweeps; ++t)
    betas[t] = params.n_sweeps == 1
                   ? beta1
                   : beta0 * std::pow(beta1 / beta0,
                                      static_cast<double>(t) /
                                          (params.n_sweeps - 1));

  SolveResult result;
  std::vector<double> read_energies;
  read_energies.reserve(static_cast<std::size_t>(params.n_reads));
  for (int r = 0; r < params.n_reads; ++r) {
    std::mt19937_64 rng(read_seed(params.seed, static_cast<std::uint64_t>(r)));
    Spins s(n);
    for (auto& v : s) v = (rng() >> 63) ? Spin{1} : Spin{-1};
    std::vector<double> g = local_fields(model, s);
    double e = energy(model, s);
    Spins best = s;
    double best_e = e;
    for (double beta : betas) {
      for (std::size_t i = 0; i < n; ++i) {
        const double de = flip_delta(s[i], g[i]);
        if (de <= 0.0 || uniform01(rng) < std::exp(-beta * de)) {
          flip(model, s, g, i);
          e += de;
        }
      }
      if (e < best_e) {
        best_e = e;
        best = s;
      }
    }
    const double exact_e = energy(model, best);
    read_energies.push_back(exact_e);
    if (r == 0 || exact_e < result.best_energy) {
      result.best_energy = exact_e;
      result.best_spins = best;
    }
  }
  result.energy_histogram = histogram(read_energies);
  return result;
}

}  // namespace spinde
