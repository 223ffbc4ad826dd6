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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinde/assembly.hpp"
#include "spinde/basis.hpp"
#include "spinde/encoding.hpp"
#include "spinde/equations.hpp"
#include "spinde/solvers.hpp"

namespace spinde {

enum class Backend { exact, sa };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view name);

struct Hyperparams {
  int n_spins = 3;
  // Empty means all zeros (centers) or all ones (scales); a single value is
  // broadcast to every weight.
  std::vector<double> initial_centers;
  std::vector<double> initial_scales;
  int n_epochs = 10;
  double scale_factor = 0.5;
  Backend backend = Backend::exact;
  AnnealParams anneal;
  int exact_spin_cap = kDefaultExactSpinCap;

  void validate() const;
  Eigen::VectorXd centers_for(Eigen::Index n_weights) const;
  Eigen::VectorXd scales_for(Eigen::Index n_weights) const;
};

struct EpochRecord {
  double loss;            // loss of this epoch's decoded weights
  double best_loss;       // best loss seen up to and including this epoch
  double scale_max;       // largest scale used in this epoch's encoding
};

/// Result of the epoch loop. Calling it evaluates f_n(x) = sum_m w_nm Phi_m(x).
class Solution {
 public:
  Solution(Eigen::MatrixXd weights, Basis basis, double loss,
           std::vector<EpochRecord> trace, Eigen::VectorXd final_scales);

  const Eigen::MatrixXd& weights() const { return weights_; }
  const Basis& basis() const { return basis_; }
  double loss() const { return loss_; }
  const std::vector<EpochRecord>& trace() const { return trace_; }
  // Scales of the last epoch's encoding (the initial scales if no epoch ran).
  const Eigen::VectorXd& final_scales() const { return final_scales_; }
  int n_out() const { return static_cast<int>(weights_.rows()); }

  // xs is n_points x n_in; the result is n_points x n_out.
  Eigen::MatrixXd evaluate(const Eigen::MatrixXd& xs) const;
  Eigen::MatrixXd operator()(const Eigen::MatrixXd& xs) const {
    return evaluate(xs);
  }

 private:
  Eigen::MatrixXd weights_;
  Basis basis_;
  double loss_;
  std::vector<EpochRecord> trace_;
  Eigen::VectorXd final_scales_;
};

// Solve an Ising model with the configured backend. Per-epoch SA seeds are
// derived from the base seed and the epoch number.
SolveResult run_backend(const IsingModel& model, const Hyperparams& hyper,
                        int epoch);

// Assemble, then for each epoch: encode around the current centers, find
// the ground state, decode, recenter on the decoded weights and shrink the
// scales by scale_factor. Returns the lowest-loss weights of any epoch.
Solution solve(std::span<const Equation> equations, const Basis& basis,
               int n_out, const Hyperparams& hyper);

Solution solve(const QuadraticLoss& ql, const Basis& basis,
               const Hyperparams& hyper);

}  // namespace spinde
