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

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinde/problem_file.hpp"
#include "spinde/refine.hpp"

namespace spinde::cli {

// Exit codes of the command line front end.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  // schema, shape or value errors
  kCapability = 2,    // unsupported derivative order, too many spins, ...
  kBackend = 3,       // solver or I/O failure
};

// args excludes the program name.
int run_app(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Resolves a problem argument: an existing file is parsed, otherwise the
// final path component is looked up among the bundled examples.
Problem resolve_problem(const std::string& spec);

// n^n_in points spanning the bounding box of all equation samples, first
// coordinate varying fastest.
Eigen::MatrixXd evaluation_grid(const Problem& problem, int points_per_dim);

std::string solution_csv(const Eigen::MatrixXd& points,
                         const Eigen::MatrixXd& values);

std::string solution_metadata(const Problem& problem, const Solution& sol,
                              const std::string& source);

}  // namespace spinde::cli
