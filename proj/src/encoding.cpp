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

#include "spinde/encoding.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "json.hpp"
#include "spinde/error.hpp"
#include "spinde/kernels.hpp"

namespace spinde {

SpinEncoding::SpinEncoding(Eigen::VectorXd c, Eigen::VectorXd s, int n)
    : centers(std::move(c)), scales(std::move(s)), n_spins(n) {
  if (centers.size() != scales.size())
    throw ShapeError("encoding has " + std::to_string(centers.size()) +
                     " centers but " + std::to_string(scales.size()) +
                     " scales");
  if (n_spins < 1) throw ValidationError("n_spins must be >= 1");
  if (!centers.allFinite()) throw ValidationError("centers must be finite");
  for (Eigen::Index i = 0; i < scales.size(); ++i)
    if (!(scales(i) > 0.0) || !std::isfinite(scales(i)))
      throw ValidationError("encoding scales must be positive and finite");
}

void check_spins(std::span<const Spin> spins) {
  for (std::size_t i = 0; i < spins.size(); ++i)
    if (spins[i] != 1 && spins[i] != -1)
      throw ValidationError("spin " + std::to_string(i) + " has value " +
                            std::to_string(spins[i]) + ", expected -1 or +1");
}

Eigen::VectorXd decode(std::span<const Spin> spins, const SpinEncoding& enc) {
  if (spins.size() != enc.total_spins())
    throw ShapeError("got " + std::to_string(spins.size()) +
                     " spins, encoding uses " +
                     std::to_string(enc.total_spins()));
  check_spins(spins);
  Eigen::VectorXd w = enc.centers;
  for (Eigen::Index N = 0; N < enc.n_weights(); ++N) {
    double frac = 0.0;
    for (int alpha = 1; alpha <= enc.n_spins; ++alpha)
      frac += spins[enc.spin_index(alpha, N)] * std::ldexp(1.0, -alpha);
    w(N) += enc.scales(N) * frac;
  }
  return w;
}

IsingModel build_ising(const QuadraticLoss& ql, const SpinEncoding& enc) {
  const Eigen::Index D = ql.size();
  if (enc.n_weights() != D)
    throw ShapeError("encoding covers " + std::to_string(enc.n_weights()) +
                     " weights, loss has " + std::to_string(D));
  const auto n = static_cast<Eigen::Index>(enc.total_spins());

  // w = c + A sigma with A(N, (alpha, N)) = s_N 2^-alpha. Substituting gives
  // sigma^T (A^T J A) sigma + (h + 2 J c)^T A sigma + loss(c).
  Eigen::VectorXd a(n);
  for (int alpha = 1; alpha <= enc.n_spins; ++alpha)
    for (Eigen::Index N = 0; N < D; ++N)
      a(static_cast<Eigen::Index>(enc.spin_index(alpha, N))) =
          std::ldexp(enc.scales(N), -alpha);

  const Eigen::VectorXd shifted_h = ql.h + 2.0 * ql.J * enc.centers;

  IsingModel model;
  model.J.resize(n, n);
  model.h.resize(n);
  double diagonal = 0.0;
  for (Eigen::Index q = 0; q < n; ++q) {
    const Eigen::Index Q = q % D;
    for (Eigen::Index p = 0; p < n; ++p)
      model.J(p, q) = a(p) * a(q) * ql.J(p % D, Q);
    // sigma^2 = 1: diagonal couplings are constants.
    diagonal += model.J(q, q);
    model.J(q, q) = 0.0;
    model.h(q) = a(q) * shifted_h(Q);
  }
  model.offset = loss_value(ql, enc.centers) + diagonal;
  return model;
}

double energy(const IsingModel& model, std::span<const Spin> spins) {
  if (spins.size() != model.num_spins())
    throw ShapeError("got " + std::to_string(spins.size()) +
                     " spins, model has " + std::to_string(model.num_spins()));
  const std::size_t n = spins.size();
  const std::span<const signed char> s{
      reinterpret_cast<const signed char*>(spins.data()), n};
  double e = kernels::signed_dot({model.h.data(), n}, s);
  for (std::size_t i = 0; i < n; ++i) {
    const double row = kernels::signed_dot(
        {model.J.col(static_cast<Eigen::Index>(i)).data(), n}, s);
    e += spins[i] > 0 ? row : -row;
  }
  return e;
}

std::string ising_to_json(const IsingModel& model, const SpinEncoding& enc) {
  using nlohmann::json;
  const auto n = static_cast<Eigen::Index>(model.num_spins());
  json linear = json::object();
  for (Eigen::Index i = 0; i < n; ++i) linear[std::to_string(i)] = model.h(i);
  json quadratic = json::object();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = model.J(i, j) + model.J(j, i);
      if (v != 0.0)
        quadratic[std::to_string(i) + "," + std::to_string(j)] = v;
    }
  json doc;
  doc["vartype"] = "SPIN";
  doc["num_spins"] = n;
  doc["linear"] = std::move(linear);
  doc["quadratic"] = std::move(quadratic);
  doc["offset"] = model.offset;
  doc["encoding"] = {
      {"centers", std::vector<double>(enc.centers.begin(), enc.centers.end())},
      {"scales", std::vector<double>(enc.scales.begin(), enc.scales.end())},
      {"n_spins", enc.n_spins}};
  doc["flattening"] = "N_hat = alpha*N_max + N";
  return doc.dump(2);
}

void export_ising(const IsingModel& model, const SpinEncoding& enc,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << ising_to_json(model, enc) << '\n';
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace spinde
