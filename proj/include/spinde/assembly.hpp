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

#include <span>

#include <Eigen/Dense>

#include "spinde/basis.hpp"
#include "spinde/equations.hpp"

namespace spinde {

/// loss(w) = w^T J w + h^T w + offset over the flattened weight vector,
/// w[n * basis_dim + m] = weights(n, m).
struct QuadraticLoss {
  Eigen::MatrixXd J;
  Eigen::VectorXd h;
  double offset = 0.0;
  int n_out = 0;
  std::size_t basis_dim = 0;

  Eigen::Index size() const { return h.size(); }
};

Eigen::VectorXd flatten(const Eigen::MatrixXd& weights);
Eigen::MatrixXd unflatten(const Eigen::VectorXd& flat, int n_out);

// J = sum_i weight_i H_i^T H_i, h = 2 sum_i weight_i H_i^T B_i,
// offset = sum_i weight_i |B_i|^2, with H_i each equation's design matrix.
QuadraticLoss assemble_loss(std::span<const Equation> equations,
                            const Basis& basis, int n_out);

double loss_value(const QuadraticLoss& ql, const Eigen::VectorXd& w);

struct ContinuousMinimum {
  Eigen::VectorXd weights;
  double loss;
};

// Minimum-norm solution of 2 J w = -h.
ContinuousMinimum continuous_minimum(const QuadraticLoss& ql);

}  // namespace spinde
