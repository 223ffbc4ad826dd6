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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spinde {

class Basis;

// Derivative orders per input coordinate; all zeros means the function value.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> orders);
  MultiIndex(std::initializer_list<int> orders)
      : MultiIndex(std::vector<int>(orders)) {}

  static MultiIndex zero(int n_in) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(n_in), 0));
  }

  const std::vector<int>& orders() const { return orders_; }
  int operator[](std::size_t j) const { return orders_[j]; }
  std::size_t size() const { return orders_.size(); }
  int total_order() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> orders_;
};

// coefficient(x) * d^derivative f_function(x), sampled at the equation's points.
struct Term {
  int function_index = 0;
  MultiIndex derivative;
  Eigen::VectorXd coefficients;

};

bool operator==(const Term& a, const Term& b);

/// One linear equation sum_terms C(x) d^k f_n(x) + B(x) = 0 enforced on a
/// finite sample set. Boundary and initial conditions are ordinary equations
/// whose samples lie on the boundary.
///
/// weight multiplies the equation's squared residuals in the loss; residuals
/// themselves carry a factor sqrt(weight).
class Equation {
 public:
  Equation(Eigen::MatrixXd samples, std::vector<Term> terms,
           Eigen::VectorXd inhomogeneous, double weight = 1.0);

  const Eigen::MatrixXd& samples() const { return samples_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Eigen::VectorXd& inhomogeneous() const { return inhomogeneous_; }
  double weight() const { return weight_; }
  Eigen::Index n_samples() const { return samples_.rows(); }
  int n_in() const { return static_cast<int>(samples_.cols()); }

  // Throws ShapeError unless every term targets a function below n_out.
  void check_outputs(int n_out) const;

  // Row j, column n * dim + m holds H_n(x_j)[Phi_m] = sum over the terms
  // acting on f_n of coeff_j * d^k Phi_m(x_j). Unweighted.
  Eigen::MatrixXd design_matrix(const Basis& basis, int n_out) const;

 private:
  Eigen::MatrixXd samples_;
  std::vector<Term> terms_;
  Eigen::VectorXd inhomogeneous_;
  double weight_;
};

// Exact equality of every field, including sample bits.
bool operator==(const Equation& a, const Equation& b);

// sqrt(weight) * (sum_terms coeff * d^k f_n + B) at every sample, where
// f_n = sum_m weights(n, m) Phi_m. Evaluated term by term through the basis,
// independently of design_matrix.
Eigen::VectorXd residuals(const Equation& eq, const Basis& basis,
                          const Eigen::MatrixXd& weights);

// sum over equations of the squared residuals.
double residual_loss(std::span<const Equation> equations, const Basis& basis,
                     const Eigen::MatrixXd& weights);

}  // namespace spinde
