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

#include "cli_app.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinde/bundled.hpp"
#include "spinde/encoding.hpp"
#include "spinde/error.hpp"
#include "spinde/kernels.hpp"

namespace spinde::cli {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BackendError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw BackendError("failed writing " + path.string());
}

struct RunOptions {
  std::string problem;
  std::string backend;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_spins;
  std::optional<int> epochs;
  std::optional<double> scale_factor;
  std::optional<int> reads;
  std::optional<int> sweeps;
  std::string out_path = "solution.csv";
  int eval_grid = 21;
  std::string export_path;
  bool loss_only = false;
};

void apply_overrides(Problem& p, const RunOptions& o) {
  Hyperparams& h = p.hyper;
  if (!o.backend.empty()) h.backend = parse_backend(o.backend);
  if (o.seed) h.anneal.seed = *o.seed;
  if (o.n_spins) h.n_spins = *o.n_spins;
  if (o.epochs) h.n_epochs = *o.epochs;
  if (o.scale_factor) h.scale_factor = *o.scale_factor;
  if (o.reads) h.anneal.n_reads = *o.reads;
  if (o.sweeps) h.anneal.n_sweeps = *o.sweeps;
  h.validate();
}

int do_run(const RunOptions& o, std::ostream& out) {
  Problem p = resolve_problem(o.problem);
  apply_overrides(p, o);
  const QuadraticLoss ql = assemble_loss(p.equations, p.basis, p.n_out);

  if (!o.export_path.empty()) {
    const SpinEncoding enc(p.hyper.centers_for(ql.size()),
                           p.hyper.scales_for(ql.size()), p.hyper.n_spins);
    export_ising(build_ising(ql, enc), enc, o.export_path);
    out << "wrote " << o.export_path << " (" << enc.total_spins()
        << " spins)\n";
    return kOk;
  }

  const Solution sol = solve(ql, p.basis, p.hyper);
  if (o.loss_only) {
    out << fmt(sol.loss()) << '\n';
    return kOk;
  }
  out << "problem: " << o.problem << '\n';
  out << "basis: " << p.basis.name() << ", " << ql.size() << " weights, "
      << ql.size() * p.hyper.n_spins << " spins, backend "
      << to_string(p.hyper.backend) << '\n';
  for (std::size_t i = 0; i < sol.trace().size(); ++i)
    out << "epoch " << i << ": loss " << fmt(sol.trace()[i].loss) << ", best "
        << fmt(sol.trace()[i].best_loss) << '\n';

  const Eigen::MatrixXd grid = evaluation_grid(p, o.eval_grid);
  write_file(o.out_path, solution_csv(grid, sol.evaluate(grid)));
  write_file(o.out_path + ".meta.json", solution_metadata(p, sol, o.problem));
  out << "loss: " << fmt(sol.loss()) << '\n';
  out << "wrote " << o.out_path << " and " << o.out_path << ".meta.json\n";
  return kOk;
}

}  // namespace

Problem resolve_problem(const std::string& spec) {
  const std::filesystem::path path(spec);
  if (std::filesystem::is_regular_file(path)) return load_problem(path);
  const std::string name = path.filename().string();
  for (const auto& info : list_examples())
    if (info.name == name) return bundled_example(name).problem;
  throw ValidationError(spec + ": no such problem file or bundled example");
}

Eigen::MatrixXd evaluation_grid(const Problem& p, int n) {
  if (n < 1) throw ValidationError("--eval-grid must be >= 1");
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(p.n_in, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (const Equation& eq : p.equations) {
    lo = lo.cwiseMin(eq.samples().colwise().minCoeff().transpose());
    hi = hi.cwiseMax(eq.samples().colwise().maxCoeff().transpose());
  }
  Eigen::Index total = 1;
  for (int j = 0; j < p.n_in; ++j) total *= n;
  Eigen::MatrixXd pts(total, p.n_in);
  for (Eigen::Index r = 0; r < total; ++r) {
    Eigen::Index rest = r;
    for (int j = 0; j < p.n_in; ++j) {
      const Eigen::Index i = rest % n;
      rest /= n;
      pts(r, j) = n == 1 ? lo(j)
                  : i == n - 1 ? hi(j)
                               : lo(j) + (hi(j) - lo(j)) * static_cast<double>(i) / (n - 1);
    }
  }
  return pts;
}

std::string solution_csv(const Eigen::MatrixXd& points,
                         const Eigen::MatrixXd& values) {
  std::ostringstream os;
  for (Eigen::Index j = 0; j < points.cols(); ++j) os << (j ? "," : "") << 'x' << j;
  for (Eigen::Index n = 0; n < values.cols(); ++n) os << ",f" << n;
  os << '\n';
  for (Eigen::Index r = 0; r < points.rows(); ++r) {
    for (Eigen::Index j = 0; j < points.cols(); ++j)
      os << (j ? "," : "") << fmt(points(r, j));
    for (Eigen::Index n = 0; n < values.cols(); ++n) os << ',' << fmt(values(r, n));
    os << '\n';
  }
  return os.str();
}

std::string solution_metadata(const Problem& p, const Solution& sol,
                              const std::string& source) {
  using nlohmann::json;
  json epochs = json::array();
  for (std::size_t i = 0; i < sol.trace().size(); ++i) {
    const auto& e = sol.trace()[i];
    epochs.push_back({{"epoch", i},
                      {"loss", e.loss},
                      {"best_loss", e.best_loss},
                      {"scale_max", e.scale_max}});
  }
  json weights = json::array();
  for (Eigen::Index n = 0; n < sol.weights().rows(); ++n) {
    std::vector<double> row(sol.weights().cols());
    for (Eigen::Index m = 0; m < sol.weights().cols(); ++m) row[m] = sol.weights()(n, m);
    weights.push_back(row);
  }
  const Hyperparams& h = p.hyper;
  json hyper = {{"n_spins", h.n_spins},
                {"n_epochs", h.n_epochs},
                {"scale_factor", h.scale_factor},
                {"centers", h.initial_centers},
                {"scales", h.initial_scales},
                {"backend", std::string(to_string(h.backend))},
                {"n_reads", h.anneal.n_reads},
                {"n_sweeps", h.anneal.n_sweeps},
                {"exact_spin_cap", h.exact_spin_cap}};
  if (h.anneal.beta_initial) hyper["beta_initial"] = *h.anneal.beta_initial;
  if (h.anneal.beta_final) hyper["beta_final"] = *h.anneal.beta_final;
  json doc = {{"problem", source},
              {"description", p.description},
              {"final_loss", sol.loss()},
              {"epochs", epochs},
              {"weights", weights},
              {"basis",
               {{"family", std::string(p.basis.name())},
                {"size_per_dim", p.basis.size_per_dim()},
                {"n_in", p.basis.n_in()},
                {"scale", p.basis.scale()},
                {"frequency", p.basis.frequency()}}},
              {"hyperparameters", hyper},
              {"seed", h.anneal.seed}};
  return doc.dump(2) + "\n";
}

int run_app(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Solve linear differential equations through Ising-model ground states"};
  app.require_subcommand(1);

  RunOptions opts;
  CLI::App* run = app.add_subcommand("run", "Solve a problem file or bundled example");
  run->add_option("problem", opts.problem, "Problem file, or a bundled example name")->required();
  run->add_option("--backend", opts.backend, "Ground-state backend")
      ->check(CLI::IsMember({"exact", "sa"}));
  run->add_option("--seed", opts.seed, "Simulated annealing seed");
  run->add_option("--n-spins", opts.n_spins, "Spins per weight")->check(CLI::Range(1, 52));
  run->add_option("--epochs", opts.epochs, "Number of refinement epochs")->check(CLI::NonNegativeNumber);
  run->add_option("--scale-factor", opts.scale_factor, "Scale shrink factor per epoch, in (0, 1]");
  run->add_option("--reads", opts.reads, "Annealing reads per epoch")->check(CLI::PositiveNumber);
  run->add_option("--sweeps", opts.sweeps, "Sweeps per annealing read")->check(CLI::PositiveNumber);
  run->add_option("--out", opts.out_path, "Solution table path (CSV); metadata goes to PATH.meta.json");
  run->add_option("--eval-grid", opts.eval_grid, "Evaluation points per input dimension")
      ->check(CLI::PositiveNumber);
  run->add_option("--export-ising", opts.export_path,
                  "Write the first-epoch Ising model to PATH and stop");
  run->add_flag("--loss-only", opts.loss_only, "Print only the final loss");

  CLI::App* list = app.add_subcommand("list-examples", "List bundled examples");

  std::string dump_name, dump_out;
  CLI::App* dump = app.add_subcommand("dump-example", "Write a bundled example as a problem file");
  dump->add_option("name", dump_name, "Example name")->required();
  dump->add_option("--out", dump_out, "Output path (default: standard output)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*list) {
      for (const auto& info : list_examples())
        out << info.name << "  " << info.summary << '\n';
      return kOk;
    }
    if (*dump) {
      const std::string text = write_problem(bundled_example(dump_name).problem);
      if (dump_out.empty()) out << text;
      else write_file(dump_out, text);
      return kOk;
    }
    return do_run(opts, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapability;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBackend;
  }
}

}  // namespace spinde::cli
