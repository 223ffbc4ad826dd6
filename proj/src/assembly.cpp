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

#include "spinde/assembly.hpp"

#include <cmath>
#include <string>

#include "spinde/error.hpp"
#include "spinde/kernels.hpp"

namespace spinde {

Eigen::VectorXd flatten(const Eigen::MatrixXd& weights) {
  Eigen::VectorXd flat(weights.size());
  for (Eigen::Index n = 0; n < weights.rows(); ++n)
    flat.segment(n * weights.cols(), weights.cols()) = weights.row(n);
  return flat;
}

Eigen::MatrixXd unflatten(const Eigen::VectorXd& flat, int n_out) {
  if (n_out < 1 || flat.size() % n_out != 0)
    throw ShapeError("cannot split " + std::to_string(flat.size()) +
                     " weights into " + std::to_string(n_out) + " rows");
  const Eigen::Index dim = flat.size() / n_out;
  Eigen::MatrixXd w(n_out, dim);
  for (Eigen::Index n = 0; n < n_out; ++n)
    w.row(n) = flat.segment(n * dim, dim).transpose();
  return w;
}

QuadraticLoss assemble_loss(std::span<const Equation> equations,
                            const Basis& basis, int n_out) {
  if (n_out < 1) throw ShapeError("n_out must be >= 1");
  const auto D = static_cast<Eigen::Index>(n_out * basis.dimension());
  QuadraticLoss ql;
  ql.J = Eigen::MatrixXd::Zero(D, D);
  ql.h = Eigen::VectorXd::Zero(D);
  ql.n_out = n_out;
  ql.basis_dim = basis.dimension();

  for (const Equation& eq : equations) {
    const Eigen::MatrixXd H = eq.design_matrix(basis, n_out);
    const double wt = eq.weight();
    const double root = std::sqrt(wt);
    // Sample by sample rank-one updates on the sqrt(weight)-scaled row.
    // Column a receives row_a * row, and since a*b == b*a in floating point
    // J stays exactly symmetric.
    Eigen::VectorXd row(D);
    const std::span<const double> row_view{row.data(), static_cast<std::size_t>(D)};
    for (Eigen::Index j = 0; j < H.rows(); ++j) {
      row = root * H.row(j).transpose();
      const double b = eq.inhomogeneous()(j);
      for (Eigen::Index a = 0; a < D; ++a) {
        const double ra = row(a);
        if (ra == 0.0) continue;
        kernels::axpy(ra, row_view,
                      {ql.J.col(a).data(), static_cast<std::size_t>(D)});
      }
      kernels::axpy(2.0 * root * b, row_view,
                    {ql.h.data(), static_cast<std::size_t>(D)});
      ql.offset += wt * b * b;
    }
  }
  return ql;
}

double loss_value(const QuadraticLoss& ql, const Eigen::VectorXd& w) {
  if (w.size() != ql.size())
    throw ShapeError("weight vector has " + std::to_string(w.size()) +
                     " entries, loss expects " + std::to_string(ql.size()));
  const auto D = static_cast<std::size_t>(w.size());
  double quad = 0.0;
  for (Eigen::Index a = 0; a < w.size(); ++a)
    quad += w(a) * kernels::dot({ql.J.col(a).data(), D}, {w.data(), D});
  return quad + kernels::dot({ql.h.data(), D}, {w.data(), D}) + ql.offset;
}

ContinuousMinimum continuous_minimum(const QuadraticLoss& ql) {
  if (ql.size() == 0) return {Eigen::VectorXd(), ql.offset};
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(2.0 * ql.J);
  Eigen::VectorXd w = cod.solve(-ql.h);
  return {w, loss_value(ql, w)};
}

}  // namespace spinde
