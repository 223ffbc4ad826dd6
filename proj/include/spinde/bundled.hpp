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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinde/problem_file.hpp"

namespace spinde {

struct BundledExample {
  std::string name;
  std::string summary;
  Problem problem;
  // Closed-form solution: n_points x n_in in, n_points x n_out out.
  std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> exact;
};

struct ExampleInfo {
  std::string name;
  std::string summary;
};

// laguerre_n3 .. laguerre_n6, wave, coupled.
std::vector<ExampleInfo> list_examples();

// Throws ValidationError for an unknown name.
BundledExample bundled_example(std::string_view name);

// L_n(x) by the three-term recurrence.
double laguerre_polynomial(int n, double x);

BundledExample laguerre_example(int n);
BundledExample wave_example();
BundledExample coupled_example();

}  // namespace spinde
