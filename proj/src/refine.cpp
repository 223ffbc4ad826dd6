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

#include "spinde/refine.hpp"

#include <cmath>
#include <string>

#include "spinde/error.hpp"

namespace spinde {
namespace {

Eigen::VectorXd broadcast(const std::vector<double>& values,
                          Eigen::Index n, double fallback, const char* what) {
  if (values.empty()) return Eigen::VectorXd::Constant(n, fallback);
  if (values.size() == 1) return Eigen::VectorXd::Constant(n, values[0]);
  if (static_cast<Eigen::Index>(values.size()) != n)
    throw ShapeError(std::string(what) + " has " +
                     std::to_string(values.size()) + " entries for " +
                     std::to_string(n) + " weights");
  return Eigen::Map<const Eigen::VectorXd>(values.data(), n);
}

}  // namespace

std::string_view to_string(Backend b) {
  return b == Backend::exact ? "exact" : "sa";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::exact;
  if (name == "sa") return Backend::sa;
  throw ValidationError("unknown backend '" + std::string(name) +
                        "', expected exact or sa");
}

void Hyperparams::validate() const {
  if (n_spins < 1) throw ValidationError("n_spins must be >= 1");
  if (n_epochs < 0) throw ValidationError("n_epochs must be >= 0");
  if (!(scale_factor > 0.0 && scale_factor <= 1.0))
    throw ValidationError("scale_factor must lie in (0, 1]");
  if (exact_spin_cap < 0) throw ValidationError("exact_spin_cap must be >= 0");
  for (double c : initial_centers)
    if (!std::isfinite(c)) throw ValidationError("centers must be finite");
  for (double s : initial_scales)
    if (!(s > 0.0) || !std::isfinite(s))
      throw ValidationError("scales must be positive and finite");
  anneal.validate();
}

Eigen::VectorXd Hyperparams::centers_for(Eigen::Index n) const {
  return broadcast(initial_centers, n, 0.0, "centers");
}

Eigen::VectorXd Hyperparams::scales_for(Eigen::Index n) const {
  return broadcast(initial_scales, n, 1.0, "scales");
}

Solution::Solution(Eigen::MatrixXd weights, Basis basis, double loss,
                   std::vector<EpochRecord> trace, Eigen::VectorXd final_scales)
    : weights_(std::move(weights)),
      basis_(std::move(basis)),
      loss_(loss),
      trace_(std::move(trace)),
      final_scales_(std::move(final_scales)) {}

Eigen::MatrixXd Solution::evaluate(const Eigen::MatrixXd& xs) const {
  if (xs.cols() != basis_.n_in())
    throw ShapeError("evaluation points have " + std::to_string(xs.cols()) +
                     " columns, solution expects " +
                     std::to_string(basis_.n_in()));
  const auto dim = static_cast<Eigen::Index>(basis_.dimension());
  Eigen::MatrixXd phi(xs.rows(), dim);
  std::vector<double> x(static_cast<std::size_t>(xs.cols()));
  for (Eigen::Index p = 0; p < xs.rows(); ++p) {
    for (Eigen::Index c = 0; c < xs.cols(); ++c) x[c] = xs(p, c);
    for (Eigen::Index m = 0; m < dim; ++m)
      phi(p, m) = basis_.eval(static_cast<std::size_t>(m), x);
  }
  return phi * weights_.transpose();
}

SolveResult run_backend(const IsingModel& model, const Hyperparams& hyper,
                        int epoch) {
  if (hyper.backend == Backend::exact)
    return solve_exact(model, hyper.exact_spin_cap);
  AnnealParams p = hyper.anneal;
  p.seed = read_seed(hyper.anneal.seed,
                     0x5eed0000ULL + static_cast<std::uint64_t>(epoch));
  return solve_sa(model, p);
}

Solution solve(const QuadraticLoss& ql, const Basis& basis,
               const Hyperparams& hyper) {
  hyper.validate();
  const Eigen::Index D = ql.size();
  Eigen::VectorXd centers = hyper.centers_for(D);
  Eigen::VectorXd scales = hyper.scales_for(D);

  Eigen::VectorXd best_w = centers;
  double best_loss = loss_value(ql, centers);
  std::vector<EpochRecord> trace;
  Eigen::VectorXd last_scales = scales;
  for (int epoch = 0; epoch < hyper.n_epochs; ++epoch) {
    const SpinEncoding enc(centers, scales, hyper.n_spins);
    const IsingModel model = build_ising(ql, enc);
    const SolveResult found = run_backend(model, hyper, epoch);
    if (found.best_spins.size() != enc.total_spins())
      throw BackendError("backend returned " +
                         std::to_string(found.best_spins.size()) +
                         " spins, expected " +
                         std::to_string(enc.total_spins()));
    const Eigen::VectorXd w = decode(found.best_spins, enc);
    const double loss = loss_value(ql, w);
    if (epoch == 0 || loss < best_loss) {
      best_loss = loss;
      best_w = w;
    }
    trace.push_back({loss, best_loss, scales.maxCoeff()});
    last_scales = scales;
    centers = w;
    scales *= hyper.scale_factor;
  }
  return Solution(unflatten(best_w, ql.n_out), basis, best_loss,
                  std::move(trace), last_scales);
}

Solution solve(std::span<const Equation> equations, const Basis& basis,
               int n_out, const Hyperparams& hyper) {
  return solve(assemble_loss(equations, basis, n_out), basis, hyper);
}

}  // namespace spinde
