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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spinde/basis.hpp"
#include "spinde/equations.hpp"
#include "spinde/refine.hpp"

namespace spinde {

/// A complete problem: equations, basis and solver settings.
///
/// On disk this is a YAML document:
///
///   n_in: 1
///   n_out: 1
///   basis: {family: monomial, size_per_dim: 4, scale: 1.0, frequency: 3.14}
///   hyperparameters: {n_spins: 3, n_epochs: 10, scale_factor: 0.5,
///                     centers: 0.0, scales: [1, 1, 2, 2], backend: exact,
///                     n_reads: 200, n_sweeps: 1000, beta_initial: 0.1,
///                     beta_final: 100, seed: 0, exact_spin_cap: 26}
///   equations:
///     - name: ode
///       weight: 1.0
///       samples: {linspace: {start: 0, stop: 1, num: 20}}
///       terms:
///         - {function: 0, derivative: [2], coeff: {poly: [0, 1]}}
///       inhomogeneous: 0.0
///
/// Samples are an inline list of points (or of numbers when n_in is 1), a
/// linspace, or a grid {grid: [{start, stop, num}, ...]} whose first axis
/// varies fastest. Coefficients and inhomogeneous terms are a scalar, an
/// array with one value per sample, or one of the whitelisted functions of a
/// sample coordinate:
///   {poly: [c0, c1, ...]} or {poly: {coefficients: [...], axis: j}}
///   {sin|cos|exp: {amplitude: a, frequency: w, phase: p, axis: j}}
///     meaning a * f(w * x_j + p)
///   {sum: [form, ...]}, {product: [form, ...]}
/// Everything except n_in, n_out, basis.family, basis.size_per_dim and
/// equations is optional.
struct Problem {
  std::string description;
  int n_in = 1;
  int n_out = 1;
  Basis basis{BasisFamily::monomial, 1};
  Hyperparams hyper;
  std::vector<Equation> equations;
  std::vector<std::string> equation_names;
};

bool operator==(const Problem& a, const Problem& b);

// Throws ValidationError with "source:line:column: message" on any syntax or
// schema problem.
Problem parse_problem(std::string_view text,
                      std::string_view source = "<input>");
Problem load_problem(const std::filesystem::path& path);

// Serializes with every sample and coefficient expanded to explicit arrays,
// printed with enough digits to re-parse bit for bit.
std::string write_problem(const Problem& problem);

}  // namespace spinde
