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

#include "spinde/equations.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "spinde/basis.hpp"
#include "spinde/error.hpp"

namespace spinde {
namespace {

bool same(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

void check_basis(const Equation& eq, const Basis& basis) {
  if (basis.n_in() != eq.n_in())
    throw ShapeError("basis has n_in = " + std::to_string(basis.n_in()) +
                     " but equation samples have " +
                     std::to_string(eq.n_in()) + " columns");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int o : orders_)
    if (o < 0) throw ValidationError("derivative orders must be non-negative");
}

int MultiIndex::total_order() const {
  return std::accumulate(orders_.begin(), orders_.end(), 0);
}

bool operator==(const Term& a, const Term& b) {
  return a.function_index == b.function_index && a.derivative == b.derivative &&
         same(a.coefficients, b.coefficients);
}

bool operator==(const Equation& a, const Equation& b) {
  return a.weight() == b.weight() && same(a.samples(), b.samples()) &&
         same(a.inhomogeneous(), b.inhomogeneous()) && a.terms() == b.terms();
}

Equation::Equation(Eigen::MatrixXd samples, std::vector<Term> terms,
                   Eigen::VectorXd inhomogeneous, double weight)
    : samples_(std::move(samples)),
      terms_(std::move(terms)),
      inhomogeneous_(std::move(inhomogeneous)),
      weight_(weight) {
  if (samples_.rows() < 1) throw ShapeError("equation needs at least one sample");
  if (samples_.cols() < 1) throw ShapeError("samples need at least one coordinate");
  if (!samples_.allFinite()) throw ValidationError("sample coordinates must be finite");
  if (!(weight_ > 0.0) || !std::isfinite(weight_))
    throw ValidationError("equation weight must be positive and finite");
  if (inhomogeneous_.size() != samples_.rows())
    throw ShapeError("inhomogeneous term has " +
                     std::to_string(inhomogeneous_.size()) + " values for " +
                     std::to_string(samples_.rows()) + " samples");
  if (!inhomogeneous_.allFinite())
    throw ValidationError("inhomogeneous values must be finite");
  for (const Term& t : terms_) {
    if (t.function_index < 0) throw ShapeError("function index must be >= 0");
    if (t.derivative.size() != static_cast<std::size_t>(samples_.cols()))
      throw ShapeError("derivative multi-index length " +
                       std::to_string(t.derivative.size()) +
                       " does not match n_in = " +
                       std::to_string(samples_.cols()));
    if (t.coefficients.size() != samples_.rows())
      throw ShapeError("term coefficients have " +
                       std::to_string(t.coefficients.size()) + " values for " +
                       std::to_string(samples_.rows()) + " samples");
    if (!t.coefficients.allFinite())
      throw ValidationError("term coefficients must be finite");
  }
}

void Equation::check_outputs(int n_out) const {
  for (const Term& t : terms_)
    if (t.function_index >= n_out)
      throw ShapeError("term refers to function " +
                       std::to_string(t.function_index) + " but n_out = " +
                       std::to_string(n_out));
}

Eigen::MatrixXd Equation::design_matrix(const Basis& basis, int n_out) const {
  check_basis(*this, basis);
  check_outputs(n_out);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n_samples(), n_out * dim);
  std::vector<double> x(static_cast<std::size_t>(n_in()));
  for (Eigen::Index j = 0; j < n_samples(); ++j) {
    for (int c = 0; c < n_in(); ++c) x[c] = samples_(j, c);
    for (const Term& t : terms_) {
      const double coef = t.coefficients(j);
      const Eigen::Index base = t.function_index * dim;
      for (Eigen::Index m = 0; m < dim; ++m)
        H(j, base + m) +=
            coef * basis.eval_derivative(static_cast<std::size_t>(m),
                                         t.derivative, x);
    }
  }
  return H;
}

Eigen::VectorXd residuals(const Equation& eq, const Basis& basis,
                          const Eigen::MatrixXd& weights) {
  check_basis(eq, basis);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  if (weights.cols() != dim)
    throw ShapeError("weights have " + std::to_string(weights.cols()) +
                     " columns, basis dimension is " + std::to_string(dim));
  eq.check_outputs(static_cast<int>(weights.rows()));

  Eigen::VectorXd r = eq.inhomogeneous();
  std::vector<double> x(static_cast<std::size_t>(eq.n_in()));
  for (Eigen::Index j = 0; j < eq.n_samples(); ++j) {
    for (int c = 0; c < eq.n_in(); ++c) x[c] = eq.samples()(j, c);
    for (const Term& t : eq.terms()) {
      // d^k f_n(x_j), built from the basis expansion of f_n.
      double df = 0.0;
      for (Eigen::Index m = 0; m < dim; ++m)
        df += weights(t.function_index, m) *
              basis.eval_derivative(static_cast<std::size_t>(m), t.derivative,
                                    x);
      r(j) += t.coefficients(j) * df;
    }
  }
  return std::sqrt(eq.weight()) * r;
}

double residual_loss(std::span<const Equation> equations, const Basis& basis,
                     const Eigen::MatrixXd& weights) {
  double total = 0.0;
  for (const Equation& eq : equations)
    total += residuals(eq, basis, weights).squaredNorm();
  return total;
}

}  // namespace spinde
