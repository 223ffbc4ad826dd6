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

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "spinde/bundled.hpp"
#include "spinde/error.hpp"
#include "spinde/problem_file.hpp"

using namespace spinde;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_problem(text, "p.yaml");
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

const char* kDecay = R"(description: decay
n_in: 1
n_out: 1
basis:
  family: monomial
  size_per_dim: 3
hyperparameters:
  n_spins: 4
  scales: 2
  backend: sa
  seed: 11
equations:
  - name: ode
    samples: {linspace: {start: 0, stop: 1, num: 5}}
    terms:
      - {derivative: 1}
      - {coeff: 2}
    inhomogeneous: 0
  - name: init
    samples: [0]
    terms: [{}]
    inhomogeneous: -1
    weight: 4
)";

}  // namespace

TEST_CASE("parses a small problem") {
  const Problem p = parse_problem(kDecay);
  CHECK(p.description == "decay");
  CHECK(p.basis.family() == BasisFamily::monomial);
  CHECK(p.basis.dimension() == 3);
  CHECK(p.hyper.n_spins == 4);
  CHECK(p.hyper.initial_scales == std::vector<double>{2.0});
  CHECK(p.hyper.backend == Backend::sa);
  CHECK(p.hyper.anneal.seed == 11);
  CHECK(p.hyper.n_epochs == 10);
  REQUIRE(p.equations.size() == 2);
  CHECK(p.equation_names == std::vector<std::string>{"ode", "init"});
  const auto& ode = p.equations[0];
  CHECK(ode.n_samples() == 5);
  CHECK(ode.samples()(1, 0) == 0.25);
  CHECK(ode.samples()(4, 0) == 1.0);
  CHECK(ode.terms()[0].derivative == MultiIndex({1}));
  CHECK(ode.terms()[1].coefficients == Eigen::VectorXd::Constant(5, 2.0));
  CHECK(p.equations[1].weight() == 4.0);
  CHECK(p.equations[1].inhomogeneous()(0) == -1.0);
}

TEST_CASE("grid samples vary the first axis fastest") {
  const Problem p = parse_problem(R"(
n_in: 2
n_out: 1
basis: {family: fourier, size_per_dim: 2}
equations:
  - samples: {grid: [{start: 0, stop: 1, num: 3}, {start: 10, stop: 20, num: 2}]}
    terms: [{derivative: [2, 0]}, {derivative: [0, 2], coeff: -1}]
)");
  const auto& s = p.equations[0].samples();
  REQUIRE(s.rows() == 6);
  CHECK(s(0, 0) == 0.0);
  CHECK(s(1, 0) == 0.5);
  CHECK(s(2, 0) == 1.0);
  CHECK(s(3, 0) == 0.0);
  CHECK(s(0, 1) == 10.0);
  CHECK(s(3, 1) == 20.0);
  CHECK(p.basis.frequency() == std::numbers::pi);
  CHECK(p.equation_names[0] == "eq0");
}

TEST_CASE("coefficient forms") {
  const Problem p = parse_problem(R"(
n_in: 1
n_out: 2
basis: {family: trig, size_per_dim: 2}
equations:
  - samples: [0.0, 0.5, 2.0]
    terms:
      - {function: 0, coeff: {poly: [1, 2, 3]}}
      - {function: 1, coeff: [1, 2, 3]}
      - {function: 1, derivative: 1, coeff: {sin: {amplitude: 2, frequency: 3, phase: 0.5}}}
      - {function: 0, derivative: 2, coeff: {sum: [1, {exp: {}}]}}
      - {function: 0, derivative: 1, coeff: {product: [{cos: {}}, {poly: {coefficients: [0, 1]}}]}}
)");
  const auto& t = p.equations[0].terms();
  const double xs[] = {0.0, 0.5, 2.0};
  for (int i = 0; i < 3; ++i) {
    const double x = xs[i];
    CHECK(t[0].coefficients(i) == doctest::Approx(1 + 2 * x + 3 * x * x));
    CHECK(t[1].coefficients(i) == i + 1);
    CHECK(t[2].coefficients(i) == doctest::Approx(2 * std::sin(3 * x + 0.5)));
    CHECK(t[3].coefficients(i) == doctest::Approx(1 + std::exp(x)));
    CHECK(t[4].coefficients(i) == doctest::Approx(x * std::cos(x)));
  }
  CHECK(t[2].function_index == 1);
}

TEST_CASE("errors point at the offending line") {
  SUBCASE("unknown key") {
    const std::string msg = error_of("n_in: 1\nn_out: 1\nbasis: {family: monomial, size_per_dim: 2}\n"
                                     "equations:\n  - samples: [0]\n    terms: [{}]\n    colour: red\n");
    CHECK(msg.find("p.yaml:7:") == 0);
    CHECK(msg.find("colour") != std::string::npos);
  }
  SUBCASE("bad family") {
    const std::string msg = error_of("n_in: 1\nn_out: 1\nbasis:\n  family: chebyshev\n  size_per_dim: 2\n"
                                     "equations: [{samples: [0], terms: [{}]}]\n");
    CHECK(msg.find("p.yaml:") == 0);
    CHECK(msg.find("chebyshev") != std::string::npos);
  }
  SUBCASE("coefficient count mismatch") {
    const std::string msg = error_of("n_in: 1\nn_out: 1\nbasis: {family: monomial, size_per_dim: 2}\n"
                                     "equations:\n  - samples: [0, 1]\n    terms:\n      - coeff: [1, 2, 3]\n");
    CHECK(msg.find("p.yaml:7:") == 0);
  }
  SUBCASE("function index out of range") {
    CHECK(error_of("n_in: 1\nn_out: 1\nbasis: {family: monomial, size_per_dim: 2}\n"
                   "equations: [{samples: [0], terms: [{function: 1}]}]\n")
              .find("p.yaml:4:") == 0);
  }
  SUBCASE("missing required key") {
    CHECK(error_of("n_in: 1\nbasis: {family: monomial, size_per_dim: 2}\nequations: []\n")
              .find("n_out") != std::string::npos);
  }
  SUBCASE("bad hyperparameters") {
    CHECK(error_of(std::string(kDecay).replace(std::string(kDecay).find("n_spins: 4"), 10, "n_spins: 0"))
              .find("p.yaml:8:") == 0);
    CHECK(error_of(std::string(kDecay).replace(std::string(kDecay).find("backend: sa"), 11, "backend: qpu"))
              .find("p.yaml:10:") == 0);
  }
  SUBCASE("yaml syntax") {
    CHECK(error_of("n_in: [1\n").find("p.yaml:") == 0);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_problem("/nonexistent/problem.yaml"), ValidationError);
  }
}

TEST_CASE("written problems re-parse bit-exactly") {
  for (const auto& info : list_examples()) {
    CAPTURE(info.name);
    const Problem p = bundled_example(info.name).problem;
    const Problem q = parse_problem(write_problem(p));
    CHECK(q == p);
  }
  SUBCASE("awkward doubles") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    Eigen::MatrixXd xs(50, 1);
    Eigen::VectorXd c(50), b(50);
    for (int i = 0; i < 50; ++i) {
      xs(i, 0) = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
      c(i) = u(rng) / 3.0;
      b(i) = std::nextafter(u(rng), 0.0);
    }
    xs(0, 0) = 0.1 + 0.2;
    xs(1, 0) = 5e-324;
    Problem p;
    p.basis = Basis(BasisFamily::gaussian, 3, 1, 0.7);
    p.hyper.initial_centers = {0.1, 1.0 / 3.0, -2.5};
    p.hyper.anneal.beta_initial = 0.01;
    p.hyper.anneal.beta_final = 7.0 / 3.0;
    p.equations.emplace_back(xs, std::vector<Term>{Term{0, {2}, c}}, b, 1.0 / 7.0);
    p.equation_names.push_back("random");
    const Problem q = parse_problem(write_problem(p));
    CHECK(q == p);
  }
}
