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

#include "spinde/bundled.hpp"

#include <cmath>
#include <numbers>

#include "spinde/error.hpp"

namespace spinde {
namespace {

constexpr int kLineSamples = 20;
constexpr int kWaveInterior = 8;
constexpr int kWaveBoundary = 8;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXd linspace(double a, double b, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = i == n - 1 ? b : a + (b - a) * i / (n - 1);
  return v;
}

Term term(int function, MultiIndex k, Eigen::VectorXd coef) {
  return Term{function, std::move(k), std::move(coef)};
}

Eigen::VectorXd constant(Eigen::Index n, double v) {
  return Eigen::VectorXd::Constant(n, v);
}

// x y'' + (1 - x) y' + n y = 0 on [0, 1], y(0) = 1, y(1) = L_n(1).
Problem laguerre_problem(int n) {
  Problem p;
  p.description = "Laguerre equation x y'' + (1 - x) y' + " + std::to_string(n) +
                  " y = 0 with y(0) = 1, y(1) = L_" + std::to_string(n) + "(1)";
  p.n_in = 1;
  p.n_out = 1;
  p.basis = Basis(BasisFamily::monomial, 4, 1);
  p.hyper.initial_scales = {static_cast<double>(n - 2)};
  p.hyper.anneal.n_reads = 500;

  const Eigen::VectorXd x = linspace(0.0, 1.0, kLineSamples);
  const Eigen::Index ns = x.size();
  p.equations.emplace_back(
      x, std::vector<Term>{term(0, {2}, x),
                           term(0, {1}, constant(ns, 1.0) - x),
                           term(0, {0}, constant(ns, n))},
      Eigen::VectorXd::Zero(ns));
  p.equation_names.push_back("ode");

  Eigen::MatrixXd ends(2, 1);
  ends << 0.0, 1.0;
  Eigen::VectorXd b(2);
  b << -1.0, -laguerre_polynomial(n, 1.0);
  p.equations.emplace_back(ends, std::vector<Term>{term(0, {0}, constant(2, 1.0))}, b);
  p.equation_names.push_back("boundary");
  return p;
}

Eigen::MatrixXd grid(const Eigen::VectorXd& xs, const Eigen::VectorXd& ts) {
  Eigen::MatrixXd pts(xs.size() * ts.size(), 2);
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < ts.size(); ++j)
    for (Eigen::Index i = 0; i < xs.size(); ++i, ++r) {
      pts(r, 0) = xs(i);
      pts(r, 1) = ts(j);
    }
  return pts;
}

double wave_true(double x, double t) {
  return std::cos(kTwoPi * x) * std::sin(kTwoPi * t) +
         std::sin(kTwoPi * x) * std::cos(kTwoPi * t) / 2.0;
}

// phi_xx - phi_tt = 0 on [0, 1]^2 (coordinates x, t). Initial and boundary
// data are the traces of wave_true.
Problem wave_problem() {
  Problem p;
  p.description =
      "Wave equation phi_xx - phi_tt = 0 on [0,1]^2 with data from "
      "phi(x,t) = cos(2 pi x) sin(2 pi t) + sin(2 pi x) cos(2 pi t) / 2";
  p.n_in = 2;
  p.n_out = 1;
  p.basis = Basis(BasisFamily::fourier, 3, 2, 1.0, kTwoPi);
  p.hyper.n_spins = 2;

  Eigen::VectorXd inner(kWaveInterior);
  for (int i = 0; i < kWaveInterior; ++i) inner(i) = (i + 1.0) / (kWaveInterior + 1);
  const Eigen::MatrixXd interior = grid(inner, inner);
  const Eigen::Index ni = interior.rows();
  p.equations.emplace_back(
      interior,
      std::vector<Term>{term(0, {2, 0}, constant(ni, 1.0)),
                        term(0, {0, 2}, constant(ni, -1.0))},
      Eigen::VectorXd::Zero(ni));
  p.equation_names.push_back("wave");

  const Eigen::VectorXd edge = linspace(0.0, 1.0, kWaveBoundary);
  const Eigen::Index nb = edge.size();
  const Eigen::MatrixXd initial = grid(edge, Eigen::VectorXd::Zero(1));

  Eigen::VectorXd b(nb);
  for (Eigen::Index i = 0; i < nb; ++i) b(i) = -std::sin(kTwoPi * edge(i)) / 2.0;
  p.equations.emplace_back(initial, std::vector<Term>{term(0, {0, 0}, constant(nb, 1.0))}, b);
  p.equation_names.push_back("initial_value");

  for (Eigen::Index i = 0; i < nb; ++i) b(i) = -kTwoPi * std::cos(kTwoPi * edge(i));
  p.equations.emplace_back(initial, std::vector<Term>{term(0, {0, 1}, constant(nb, 1.0))}, b);
  p.equation_names.push_back("initial_velocity");

  for (double side : {0.0, 1.0}) {
    const Eigen::MatrixXd pts = grid(Eigen::VectorXd::Constant(1, side), edge);
    for (Eigen::Index i = 0; i < nb; ++i) b(i) = -std::sin(kTwoPi * edge(i));
    p.equations.emplace_back(pts, std::vector<Term>{term(0, {0, 0}, constant(nb, 1.0))}, b);
    p.equation_names.push_back(side == 0.0 ? "boundary_left" : "boundary_right");
  }
  return p;
}

// 2x' + x + 3y = 0, 2y' + 3x + y = 0 on [0, 1], x(0) = 5, y(0) = 3.
Problem coupled_problem() {
  Problem p;
  p.description =
      "Coupled system 2x' + x + 3y = 0, 2y' + 3x + y = 0, x(0) = 5, y(0) = 3";
  p.n_in = 1;
  p.n_out = 2;
  p.basis = Basis(BasisFamily::monomial, 4, 1);
  p.hyper.initial_scales = {4.0};

  const Eigen::VectorXd t = linspace(0.0, 1.0, kLineSamples);
  const Eigen::Index ns = t.size();
  // The ODE residuals are scaled by 1/10, i.e. weight 1/100 on their squares.
  constexpr double kOdeWeight = 0.01;
  p.equations.emplace_back(
      t,
      std::vector<Term>{term(0, {1}, constant(ns, 2.0)), term(0, {0}, constant(ns, 1.0)),
                        term(1, {0}, constant(ns, 3.0))},
      Eigen::VectorXd::Zero(ns), kOdeWeight);
  p.equation_names.push_back("ode_x");
  p.equations.emplace_back(
      t,
      std::vector<Term>{term(1, {1}, constant(ns, 2.0)), term(0, {0}, constant(ns, 3.0)),
                        term(1, {0}, constant(ns, 1.0))},
      Eigen::VectorXd::Zero(ns), kOdeWeight);
  p.equation_names.push_back("ode_y");

  const Eigen::MatrixXd origin = Eigen::MatrixXd::Zero(1, 1);
  p.equations.emplace_back(origin, std::vector<Term>{term(0, {0}, constant(1, 1.0))},
                           constant(1, -5.0));
  p.equation_names.push_back("initial_x");
  p.equations.emplace_back(origin, std::vector<Term>{term(1, {0}, constant(1, 1.0))},
                           constant(1, -3.0));
  p.equation_names.push_back("initial_y");
  return p;
}

}  // namespace

double laguerre_polynomial(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

BundledExample laguerre_example(int n) {
  BundledExample ex;
  ex.name = "laguerre_n" + std::to_string(n);
  ex.summary = "Laguerre equation, n = " + std::to_string(n) +
               ", monomial basis d = 4, scales " + std::to_string(n - 2);
  ex.problem = laguerre_problem(n);
  ex.exact = [n](const Eigen::MatrixXd& xs) {
    Eigen::MatrixXd out(xs.rows(), 1);
    for (Eigen::Index i = 0; i < xs.rows(); ++i)
      out(i, 0) = laguerre_polynomial(n, xs(i, 0));
    return out;
  };
  return ex;
}

BundledExample wave_example() {
  BundledExample ex;
  ex.name = "wave";
  ex.summary = "1+1D wave equation, fourier basis d = 3 (w = 2 pi), 2 spins per weight";
  ex.problem = wave_problem();
  ex.exact = [](const Eigen::MatrixXd& xs) {
    Eigen::MatrixXd out(xs.rows(), 1);
    for (Eigen::Index i = 0; i < xs.rows(); ++i) out(i, 0) = wave_true(xs(i, 0), xs(i, 1));
    return out;
  };
  return ex;
}

BundledExample coupled_example() {
  BundledExample ex;
  ex.name = "coupled";
  ex.summary = "coupled first-order system, monomial basis d = 4, scales 4";
  ex.problem = coupled_problem();
  ex.exact = [](const Eigen::MatrixXd& ts) {
    Eigen::MatrixXd out(ts.rows(), 2);
    for (Eigen::Index i = 0; i < ts.rows(); ++i) {
      const double t = ts(i, 0);
      out(i, 0) = std::exp(t) + 4.0 * std::exp(-2.0 * t);
      out(i, 1) = -std::exp(t) + 4.0 * std::exp(-2.0 * t);
    }
    return out;
  };
  return ex;
}

std::vector<ExampleInfo> list_examples() {
  std::vector<ExampleInfo> out;
  for (int n = 3; n <= 6; ++n) {
    auto ex = laguerre_example(n);
    out.push_back({ex.name, ex.summary});
  }
  out.push_back({"wave", wave_example().summary});
  out.push_back({"coupled", coupled_example().summary});
  return out;
}

BundledExample bundled_example(std::string_view name) {
  for (int n = 3; n <= 6; ++n)
    if (name == "laguerre_n" + std::to_string(n)) return laguerre_example(n);
  if (name == "wave") return wave_example();
  if (name == "coupled") return coupled_example();
  throw ValidationError("unknown example '" + std::string(name) + "'");
}

}  // namespace spinde
