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
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinde/assembly.hpp"

namespace spinde {

using Spin = std::int8_t;
using Spins = std::vector<Spin>;

/// Fixed-point encoding of D real weights in n_spins spins each:
///
///   w_N = c_N + s_N * sum_{alpha=1..n_spins} sigma_{alpha,N} / 2^alpha
///
/// Spins are laid out as spin[(alpha - 1) * D + N], so the most significant
/// spin of every weight comes first.
struct SpinEncoding {
  Eigen::VectorXd centers;
  Eigen::VectorXd scales;
  int n_spins = 3;

  SpinEncoding(Eigen::VectorXd centers, Eigen::VectorXd scales, int n_spins);

  Eigen::Index n_weights() const { return centers.size(); }
  std::size_t total_spins() const {
    return static_cast<std::size_t>(n_weights()) *
           static_cast<std::size_t>(n_spins);
  }
  std::size_t spin_index(int alpha, Eigen::Index weight) const {
    return static_cast<std::size_t>(alpha - 1) *
               static_cast<std::size_t>(n_weights()) +
           static_cast<std::size_t>(weight);
  }
};

/// energy(sigma) = sigma^T J sigma + h^T sigma with J symmetric and zero on
/// the diagonal. offset is the constant that turns energy into the loss of
/// the decoded weights.
struct IsingModel {
  Eigen::MatrixXd J;
  Eigen::VectorXd h;
  double offset = 0.0;

  std::size_t num_spins() const { return static_cast<std::size_t>(h.size()); }
};

Eigen::VectorXd decode(std::span<const Spin> spins, const SpinEncoding& enc);

IsingModel build_ising(const QuadraticLoss& ql, const SpinEncoding& enc);

// sigma^T J sigma + h^T sigma, without the offset.
double energy(const IsingModel& model, std::span<const Spin> spins);

// Throws ValidationError unless every entry is -1 or +1.
void check_spins(std::span<const Spin> spins);

// JSON hand-off document for external annealers. Couplings are written once
// per unordered pair as J_ij + J_ji.
void export_ising(const IsingModel& model, const SpinEncoding& enc,
                  const std::filesystem::path& path);
std::string ising_to_json(const IsingModel& model, const SpinEncoding& enc);

}  // namespace spinde
