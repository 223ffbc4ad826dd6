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

#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "spinde/assembly.hpp"
#include "spinde/bundled.hpp"
#include "spinde/error.hpp"
#include "test_util.hpp"

using namespace spinde;
using spinde::testing::random_vector;

namespace {

Eigen::MatrixXd at(double x) { return Eigen::MatrixXd::Constant(1, 1, x); }
Eigen::VectorXd one(double v) { return Eigen::VectorXd::Constant(1, v); }

QuadraticLoss make_loss(Eigen::MatrixXd J, Eigen::VectorXd h, double offset) {
  QuadraticLoss ql;
  ql.n_out = 1;
  ql.basis_dim = static_cast<std::size_t>(h.size());
  ql.J = std::move(J);
  ql.h = std::move(h);
  ql.offset = offset;
  return ql;
}

}  // namespace

TEST_CASE("assembly examples") {
  const Basis mono(BasisFamily::monomial, 2);
  SUBCASE("y' = 0 at 0") {
    const std::vector<Equation> eqs{Equation(at(0.0), {Term{0, {1}, one(1.0)}}, one(0.0))};
    const auto ql = assemble_loss(eqs, mono, 1);
    CHECK(ql.J == Eigen::Matrix2d{{0, 0}, {0, 1}});
    CHECK(ql.h.isZero());
    CHECK(ql.offset == 0.0);
  }
  SUBCASE("y' + y = 0 at 0") {
    const std::vector<Equation> eqs{Equation(
        at(0.0), {Term{0, {1}, one(1.0)}, Term{0, {0}, one(1.0)}}, one(0.0))};
    const auto ql = assemble_loss(eqs, mono, 1);
    CHECK(ql.J == Eigen::Matrix2d{{1, 1}, {1, 1}});
    CHECK(ql.h.isZero());
  }
  SUBCASE("inhomogeneous term alone") {
    const std::vector<Equation> eqs{Equation(at(0.3), {Term{0, {0}, one(0.0)}}, one(3.0))};
    const auto ql = assemble_loss(eqs, mono, 1);
    CHECK(ql.J.isZero());
    CHECK(ql.h.isZero());
    CHECK(ql.offset == 9.0);
  }
}

TEST_CASE("loss_value examples") {
  const auto ql = make_loss(Eigen::Matrix2d{{1, 1}, {1, 1}}, Eigen::Vector2d::Zero(), 0.0);
  CHECK(loss_value(ql, Eigen::Vector2d(1, -1)) == 0.0);
  const auto q2 = make_loss(Eigen::Matrix2d::Identity(), Eigen::Vector2d(3, 1), 2.5);
  CHECK(loss_value(q2, Eigen::Vector2d::Zero()) == 2.5);
  CHECK_THROWS_AS(loss_value(q2, Eigen::Vector3d::Zero()), ShapeError);
}

TEST_CASE("flatten is function-major") {
  Eigen::MatrixXd w(2, 3);
  w << 1, 2, 3, 4, 5, 6;
  const Eigen::VectorXd f = flatten(w);
  CHECK(f == Eigen::VectorXd{{1, 2, 3, 4, 5, 6}});
  CHECK(unflatten(f, 2) == w);
  CHECK_THROWS_AS(unflatten(f, 4), ShapeError);
}

TEST_CASE("quadratic loss matches direct residual sums on bundled problems") {
  std::mt19937_64 rng(99);
  for (const auto& info : list_examples()) {
    CAPTURE(info.name);
    const auto ex = bundled_example(info.name);
    const auto& p = ex.problem;
    const auto ql = assemble_loss(p.equations, p.basis, p.n_out);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd w = random_vector(rng, ql.size(), -5.0, 5.0);
      const double direct = residual_loss(p.equations, p.basis, unflatten(w, p.n_out));
      const double quad = loss_value(ql, w);
      CHECK(std::abs(quad - direct) <= 1e-9 * (1.0 + direct));
    }
  }
}

TEST_CASE("J is exactly symmetric and positive semidefinite") {
  for (const auto& info : list_examples()) {
    CAPTURE(info.name);
    const auto ex = bundled_example(info.name);
    const auto ql = assemble_loss(ex.problem.equations, ex.problem.basis, ex.problem.n_out);
    CHECK(ql.J == ql.J.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ql.J, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    CHECK(ev.minCoeff() >= -1e-9 * ev.maxCoeff());
  }
}

TEST_CASE("doubling one equation's weight adds exactly its contribution") {
  const auto ex = coupled_example();
  const auto& p = ex.problem;
  std::vector<Equation> doubled = p.equations;
  const auto& e0 = p.equations[0];
  doubled[0] = Equation(e0.samples(), e0.terms(), e0.inhomogeneous(), 2.0 * e0.weight());
  const std::vector<Equation> only{e0};
  const auto base = assemble_loss(p.equations, p.basis, p.n_out);
  const auto dbl = assemble_loss(doubled, p.basis, p.n_out);
  const auto part = assemble_loss(only, p.basis, p.n_out);
  const double tol = 1e-12 * (1.0 + dbl.J.cwiseAbs().maxCoeff());
  CHECK((dbl.J - base.J - part.J).cwiseAbs().maxCoeff() <= tol);
  CHECK((dbl.h - base.h - part.h).cwiseAbs().maxCoeff() <= tol);
  CHECK(std::abs(dbl.offset - base.offset - part.offset) <= 1e-12 * (1.0 + dbl.offset));
}

TEST_CASE("assembly rejects inconsistent dimensions and unsupported orders") {
  const Basis mono2(BasisFamily::monomial, 2, 2);
  const std::vector<Equation> eqs{Equation(at(0.0), {Term{0, {1}, one(1.0)}}, one(0.0))};
  CHECK_THROWS_AS(assemble_loss(eqs, mono2, 1), ShapeError);
  const std::vector<Equation> eqs2{Equation(at(0.0), {Term{1, {1}, one(1.0)}}, one(0.0))};
  CHECK_THROWS_AS(assemble_loss(eqs2, Basis(BasisFamily::monomial, 2), 1), ShapeError);
  const std::vector<Equation> eqs3{Equation(at(0.0), {Term{0, {3}, one(1.0)}}, one(0.0))};
  CHECK_THROWS_AS(assemble_loss(eqs3, Basis(BasisFamily::gaussian, 2), 1), CapabilityError);
}

TEST_CASE("continuous minimum") {
  SUBCASE("completed square") {
    const auto ql = make_loss(Eigen::Matrix2d::Identity(), Eigen::Vector2d(-2, 0), 1.0);
    const auto cm = continuous_minimum(ql);
    CHECK(cm.weights(0) == doctest::Approx(1.0));
    CHECK(cm.weights(1) == doctest::Approx(0.0));
    CHECK(cm.loss == doctest::Approx(0.0));
  }
  SUBCASE("rank deficient picks the minimum-norm solution") {
    const auto ql = make_loss(Eigen::Matrix2d{{1, 1}, {1, 1}}, Eigen::Vector2d(-2, -2), 3.0);
    const auto cm = continuous_minimum(ql);
    CHECK(cm.weights(0) == doctest::Approx(0.5));
    CHECK(cm.weights(1) == doctest::Approx(0.5));
    CHECK(cm.loss == doctest::Approx(2.0));
  }
  SUBCASE("never above any sampled point") {
    std::mt19937_64 rng(7);
    for (const auto& info : list_examples()) {
      const auto ex = bundled_example(info.name);
      const auto ql = assemble_loss(ex.problem.equations, ex.problem.basis, ex.problem.n_out);
      const auto cm = continuous_minimum(ql);
      CHECK(cm.loss == doctest::Approx(loss_value(ql, cm.weights)).epsilon(1e-9));
      for (int i = 0; i < 200; ++i) {
        const Eigen::VectorXd w = cm.weights + random_vector(rng, ql.size(), -0.1, 0.1);
        CHECK(cm.loss <= loss_value(ql, w) + 1e-9 * (1.0 + cm.loss));
      }
    }
  }
  SUBCASE("laguerre n = 3 continuous optimum is below the reported bound") {
    const auto ex = laguerre_example(3);
    const auto ql = assemble_loss(ex.problem.equations, ex.problem.basis, ex.problem.n_out);
    CHECK(continuous_minimum(ql).loss <= 2e-2);
  }
}
