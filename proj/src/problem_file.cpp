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

#include "spinde/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "spinde/error.hpp"

namespace spinde {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& msg) const {
    const YAML::Mark mark = node.Mark();
    std::ostringstream os;
    os << source_;
    if (!mark.is_null()) os << ':' << mark.line + 1 << ':' << mark.column + 1;
    os << ": " << msg;
    throw ValidationError(os.str());
  }

  void expect_map(const YAML::Node& node, const std::string& what,
                  std::initializer_list<std::string_view> allowed) const {
    if (!node.IsMap()) fail(node, what + " must be a mapping");
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      bool known = false;
      for (auto a : allowed) known = known || a == key;
      if (!known) fail(kv.first, "unknown key '" + key + "' in " + what);
    }
  }

  YAML::Node required(const YAML::Node& map, const char* key,
                      const std::string& what) const {
    YAML::Node n = map[key];
    if (!n) fail(map, what + " is missing required key '" + key + "'");
    return n;
  }

  double number(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a number");
    double v = 0.0;
    if (!YAML::convert<double>::decode(node, v))
      fail(node, what + " must be a number, got '" + node.Scalar() + "'");
    if (!std::isfinite(v)) fail(node, what + " must be finite");
    return v;
  }

  long long integer(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be an integer");
    long long v = 0;
    if (!YAML::convert<long long>::decode(node, v))
      fail(node, what + " must be an integer, got '" + node.Scalar() + "'");
    return v;
  }

  int small_int(const YAML::Node& node, const std::string& what, long long lo,
                long long hi = std::numeric_limits<int>::max()) const {
    const long long v = integer(node, what);
    if (v < lo || v > hi)
      fail(node, what + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
    return static_cast<int>(v);
  }

  std::string text(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + " must be a string");
    return node.Scalar();
  }

  std::vector<double> numbers(const YAML::Node& node,
                              const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + " must be a list of numbers");
    std::vector<double> out;
    for (const auto& item : node) out.push_back(number(item, what));
    return out;
  }

  // A scalar broadcast or a list.
  std::vector<double> scalar_or_list(const YAML::Node& node,
                                     const std::string& what) const {
    if (node.IsScalar()) return {number(node, what)};
    return numbers(node, what);
  }

  Eigen::VectorXd linspace(const YAML::Node& node,
                           const std::string& what) const {
    expect_map(node, what, {"start", "stop", "num"});
    const double a = number(required(node, "start", what), what + ".start");
    const double b = number(required(node, "stop", what), what + ".stop");
    const int num = small_int(required(node, "num", what), what + ".num", 1,
                              10'000'000);
    if (num == 1) return Eigen::VectorXd::Constant(1, a);
    Eigen::VectorXd v(num);
    for (int i = 0; i < num; ++i)
      v(i) = i == num - 1 ? b : a + (b - a) * i / (num - 1);
    return v;
  }

  Eigen::MatrixXd samples(const YAML::Node& node, int n_in) const {
    const std::string what = "samples";
    if (node.IsMap()) {
      if (node.size() != 1)
        fail(node, "samples mapping must hold exactly one of linspace, grid");
      if (node["linspace"]) {
        if (n_in != 1) fail(node, "linspace samples require n_in = 1");
        return linspace(node["linspace"], "samples.linspace");
      }
      if (node["grid"]) {
        const YAML::Node axes = node["grid"];
        if (!axes.IsSequence() || static_cast<int>(axes.size()) != n_in)
          fail(axes, "grid needs one {start, stop, num} entry per input "
                     "dimension (" + std::to_string(n_in) + ")");
        std::vector<Eigen::VectorXd> per_axis;
        Eigen::Index total = 1;
        for (const auto& ax : axes) {
          per_axis.push_back(linspace(ax, "samples.grid axis"));
          total *= per_axis.back().size();
        }
        Eigen::MatrixXd pts(total, n_in);
        for (Eigen::Index p = 0; p < total; ++p) {
          Eigen::Index rest = p;
          for (int j = 0; j < n_in; ++j) {
            const Eigen::Index len = per_axis[j].size();
            pts(p, j) = per_axis[j](rest % len);
            rest /= len;
          }
        }
        return pts;
      }
      fail(node, "samples mapping must hold linspace or grid");
    }
    if (!node.IsSequence() || node.size() == 0)
      fail(node, "samples must be a non-empty list, linspace or grid");
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(node.size()), n_in);
    Eigen::Index row = 0;
    for (const auto& item : node) {
      if (item.IsScalar()) {
        if (n_in != 1) fail(item, "each sample must be a list of " +
                                       std::to_string(n_in) + " coordinates");
        pts(row, 0) = number(item, what);
      } else {
        const auto coords = numbers(item, "sample point");
        if (static_cast<int>(coords.size()) != n_in)
          fail(item, "sample point has " + std::to_string(coords.size()) +
                         " coordinates, n_in = " + std::to_string(n_in));
        for (int j = 0; j < n_in; ++j) pts(row, j) = coords[j];
      }
      ++row;
    }
    return pts;
  }

  int axis(const YAML::Node& map, int n_in) const {
    if (!map["axis"]) return 0;
    return small_int(map["axis"], "axis", 0, n_in - 1);
  }

  Eigen::VectorXd values(const YAML::Node& node, const Eigen::MatrixXd& pts,
                         const std::string& what) const {
    const Eigen::Index n = pts.rows();
    const int n_in = static_cast<int>(pts.cols());
    if (node.IsScalar())
      return Eigen::VectorXd::Constant(n, number(node, what));
    if (node.IsSequence()) {
      const auto v = numbers(node, what);
      if (static_cast<Eigen::Index>(v.size()) != n)
        fail(node, what + " has " + std::to_string(v.size()) +
                       " values for " + std::to_string(n) + " samples");
      return Eigen::Map<const Eigen::VectorXd>(v.data(), n);
    }
    if (!node.IsMap() || node.size() != 1)
      fail(node, what + " must be a number, a list, or one of poly, sin, "
                        "cos, exp, sum, product");
    const auto key = node.begin()->first.as<std::string>();
    const YAML::Node body = node.begin()->second;

    if (key == "poly") {
      std::vector<double> coefs;
      int ax = 0;
      if (body.IsSequence()) {
        coefs = numbers(body, what + ".poly");
      } else {
        expect_map(body, what + ".poly", {"coefficients", "axis"});
        coefs = numbers(required(body, "coefficients", what + ".poly"),
                        what + ".poly.coefficients");
        ax = axis(body, n_in);
      }
      Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (auto c = coefs.rbegin(); c != coefs.rend(); ++c)
          out(i) = out(i) * pts(i, ax) + *c;
      return out;
    }
    if (key == "sin" || key == "cos" || key == "exp") {
      expect_map(body, what + "." + key,
                 {"amplitude", "frequency", "phase", "axis"});
      const double a = body["amplitude"] ? number(body["amplitude"], "amplitude") : 1.0;
      const double w = body["frequency"] ? number(body["frequency"], "frequency") : 1.0;
      const double p = body["phase"] ? number(body["phase"], "phase") : 0.0;
      const int ax = axis(body, n_in);
      const std::function<double(double)> f =
          key == "sin"   ? [](double t) { return std::sin(t); }
          : key == "cos" ? [](double t) { return std::cos(t); }
                         : [](double t) { return std::exp(t); };
      Eigen::VectorXd out(n);
      for (Eigen::Index i = 0; i < n; ++i) out(i) = a * f(w * pts(i, ax) + p);
      return out;
    }
    if (key == "sum" || key == "product") {
      if (!body.IsSequence() || body.size() == 0)
        fail(body, what + "." + key + " must be a non-empty list of forms");
      Eigen::VectorXd out = Eigen::VectorXd::Constant(n, key == "sum" ? 0.0 : 1.0);
      for (const auto& item : body) {
        const Eigen::VectorXd v = values(item, pts, what + "." + key);
        if (key == "sum") out += v;
        else out = out.cwiseProduct(v);
      }
      return out;
    }
    fail(node, "unknown coefficient form '" + key + "'");
  }

  Equation equation(const YAML::Node& node, int n_in, int n_out,
                    std::string& name) const {
    expect_map(node, "equation",
               {"name", "samples", "terms", "inhomogeneous", "weight"});
    if (node["name"]) name = text(node["name"], "equation name");
    const Eigen::MatrixXd pts = samples(required(node, "samples", "equation"), n_in);
    const YAML::Node terms_node = required(node, "terms", "equation");
    if (!terms_node.IsSequence()) fail(terms_node, "terms must be a list");
    std::vector<Term> terms;
    for (const auto& t : terms_node) {
      expect_map(t, "term", {"function", "derivative", "coeff"});
      Term term;
      term.function_index =
          t["function"] ? small_int(t["function"], "function", 0, n_out - 1) : 0;
      if (t["derivative"]) {
        const YAML::Node d = t["derivative"];
        std::vector<int> orders;
        if (d.IsScalar()) {
          if (n_in != 1) fail(d, "derivative must list one order per input dimension");
          orders.push_back(small_int(d, "derivative order", 0, 64));
        } else {
          if (!d.IsSequence() || static_cast<int>(d.size()) != n_in)
            fail(d, "derivative must list " + std::to_string(n_in) + " orders");
          for (const auto& o : d) orders.push_back(small_int(o, "derivative order", 0, 64));
        }
        term.derivative = MultiIndex(std::move(orders));
      } else {
        term.derivative = MultiIndex::zero(n_in);
      }
      term.coefficients = t["coeff"] ? values(t["coeff"], pts, "coeff")
                                     : Eigen::VectorXd::Ones(pts.rows());
      terms.push_back(std::move(term));
    }
    const Eigen::VectorXd b = node["inhomogeneous"]
                                  ? values(node["inhomogeneous"], pts, "inhomogeneous")
                                  : Eigen::VectorXd::Zero(pts.rows());
    double weight = 1.0;
    if (node["weight"]) {
      weight = number(node["weight"], "weight");
      if (!(weight > 0.0)) fail(node["weight"], "weight must be positive");
    }
    return Equation(pts, std::move(terms), b, weight);
  }

  Hyperparams hyperparams(const YAML::Node& node) const {
    Hyperparams h;
    if (!node) return h;
    expect_map(node, "hyperparameters",
               {"n_spins", "n_epochs", "scale_factor", "centers", "scales",
                "backend", "n_reads", "n_sweeps", "beta_initial", "beta_final",
                "seed", "exact_spin_cap"});
    if (node["n_spins"]) h.n_spins = small_int(node["n_spins"], "n_spins", 1, 52);
    if (node["n_epochs"]) h.n_epochs = small_int(node["n_epochs"], "n_epochs", 0);
    if (node["scale_factor"]) {
      h.scale_factor = number(node["scale_factor"], "scale_factor");
      if (!(h.scale_factor > 0.0 && h.scale_factor <= 1.0))
        fail(node["scale_factor"], "scale_factor must lie in (0, 1]");
    }
    if (node["centers"]) h.initial_centers = scalar_or_list(node["centers"], "centers");
    if (node["scales"]) {
      h.initial_scales = scalar_or_list(node["scales"], "scales");
      for (double s : h.initial_scales)
        if (!(s > 0.0)) fail(node["scales"], "scales must be positive");
    }
    if (node["backend"]) {
      try {
        h.backend = parse_backend(text(node["backend"], "backend"));
      } catch (const ValidationError& e) {
        fail(node["backend"], e.what());
      }
    }
    if (node["n_reads"]) h.anneal.n_reads = small_int(node["n_reads"], "n_reads", 1);
    if (node["n_sweeps"]) h.anneal.n_sweeps = small_int(node["n_sweeps"], "n_sweeps", 1);
    if (node["beta_initial"]) h.anneal.beta_initial = number(node["beta_initial"], "beta_initial");
    if (node["beta_final"]) h.anneal.beta_final = number(node["beta_final"], "beta_final");
    if (node["seed"]) {
      const long long s = integer(node["seed"], "seed");
      if (s < 0) fail(node["seed"], "seed must be non-negative");
      h.anneal.seed = static_cast<std::uint64_t>(s);
    }
    if (node["exact_spin_cap"])
      h.exact_spin_cap = small_int(node["exact_spin_cap"], "exact_spin_cap", 0, 62);
    try {
      h.validate();
    } catch (const ValidationError& e) {
      fail(node, e.what());
    }
    return h;
  }

 private:
  std::string source_;
};

void emit_vector(YAML::Emitter& out, const Eigen::VectorXd& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << v(i);
  out << YAML::EndSeq;
}

bool same_basis(const Basis& a, const Basis& b) {
  return a.family() == b.family() && a.size_per_dim() == b.size_per_dim() &&
         a.n_in() == b.n_in() && a.scale() == b.scale() &&
         a.frequency() == b.frequency();
}

bool same_hyper(const Hyperparams& a, const Hyperparams& b) {
  return a.n_spins == b.n_spins && a.initial_centers == b.initial_centers &&
         a.initial_scales == b.initial_scales && a.n_epochs == b.n_epochs &&
         a.scale_factor == b.scale_factor && a.backend == b.backend &&
         a.anneal.n_reads == b.anneal.n_reads &&
         a.anneal.n_sweeps == b.anneal.n_sweeps &&
         a.anneal.beta_initial == b.anneal.beta_initial &&
         a.anneal.beta_final == b.anneal.beta_final &&
         a.anneal.seed == b.anneal.seed && a.exact_spin_cap == b.exact_spin_cap;
}

}  // namespace

bool operator==(const Problem& a, const Problem& b) {
  return a.description == b.description && a.n_in == b.n_in &&
         a.n_out == b.n_out && same_basis(a.basis, b.basis) &&
         same_hyper(a.hyper, b.hyper) && a.equations == b.equations &&
         a.equation_names == b.equation_names;
}

Problem parse_problem(std::string_view text, std::string_view source) {
  Reader rd(source);
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ValidationError(std::string(source) + ":" +
                          std::to_string(e.mark.line + 1) + ":" +
                          std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  if (!root || root.IsNull()) throw ValidationError(std::string(source) + ": empty problem file");
  rd.expect_map(root, "problem",
                {"description", "n_in", "n_out", "basis", "hyperparameters",
                 "equations"});
  Problem p;
  if (root["description"]) p.description = rd.text(root["description"], "description");
  p.n_in = rd.small_int(rd.required(root, "n_in", "problem"), "n_in", 1, 16);
  p.n_out = rd.small_int(rd.required(root, "n_out", "problem"), "n_out", 1, 4096);

  const YAML::Node bn = rd.required(root, "basis", "problem");
  rd.expect_map(bn, "basis", {"family", "size_per_dim", "scale", "frequency"});
  try {
    const BasisFamily family =
        parse_basis_family(rd.text(rd.required(bn, "family", "basis"), "basis family"));
    const int d = rd.small_int(rd.required(bn, "size_per_dim", "basis"), "size_per_dim", 1, 1 << 20);
    const double scale = bn["scale"] ? rd.number(bn["scale"], "scale") : 1.0;
    const double freq = bn["frequency"] ? rd.number(bn["frequency"], "frequency")
                                        : std::numbers::pi;
    p.basis = Basis(family, d, p.n_in, scale, freq);
  } catch (const ValidationError& e) {
    if (std::string_view(e.what()).starts_with(source)) throw;
    rd.fail(bn, e.what());
  }

  p.hyper = rd.hyperparams(root["hyperparameters"]);

  const YAML::Node eqs = rd.required(root, "equations", "problem");
  if (!eqs.IsSequence() || eqs.size() == 0)
    rd.fail(eqs, "equations must be a non-empty list");
  int index = 0;
  for (const auto& e : eqs) {
    std::string name = "eq" + std::to_string(index++);
    try {
      p.equations.push_back(rd.equation(e, p.n_in, p.n_out, name));
    } catch (const ValidationError& err) {
      if (std::string_view(err.what()).starts_with(source)) throw;
      rd.fail(e, err.what());
    } catch (const ShapeError& err) {
      rd.fail(e, err.what());
    }
    p.equation_names.push_back(name);
  }
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path.string() + ": cannot open problem file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.string());
}

std::string write_problem(const Problem& p) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  if (!p.description.empty()) out << YAML::Key << "description" << YAML::Value << p.description;
  out << YAML::Key << "n_in" << YAML::Value << p.n_in;
  out << YAML::Key << "n_out" << YAML::Value << p.n_out;
  out << YAML::Key << "basis" << YAML::Value << YAML::BeginMap
      << YAML::Key << "family" << YAML::Value << std::string(p.basis.name())
      << YAML::Key << "size_per_dim" << YAML::Value << p.basis.size_per_dim()
      << YAML::Key << "scale" << YAML::Value << p.basis.scale()
      << YAML::Key << "frequency" << YAML::Value << p.basis.frequency()
      << YAML::EndMap;

  const Hyperparams& h = p.hyper;
  out << YAML::Key << "hyperparameters" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "n_spins" << YAML::Value << h.n_spins;
  out << YAML::Key << "n_epochs" << YAML::Value << h.n_epochs;
  out << YAML::Key << "scale_factor" << YAML::Value << h.scale_factor;
  if (!h.initial_centers.empty())
    out << YAML::Key << "centers" << YAML::Value << YAML::Flow << h.initial_centers;
  if (!h.initial_scales.empty())
    out << YAML::Key << "scales" << YAML::Value << YAML::Flow << h.initial_scales;
  out << YAML::Key << "backend" << YAML::Value << std::string(to_string(h.backend));
  out << YAML::Key << "n_reads" << YAML::Value << h.anneal.n_reads;
  out << YAML::Key << "n_sweeps" << YAML::Value << h.anneal.n_sweeps;
  if (h.anneal.beta_initial)
    out << YAML::Key << "beta_initial" << YAML::Value << *h.anneal.beta_initial;
  if (h.anneal.beta_final)
    out << YAML::Key << "beta_final" << YAML::Value << *h.anneal.beta_final;
  out << YAML::Key << "seed" << YAML::Value << h.anneal.seed;
  out << YAML::Key << "exact_spin_cap" << YAML::Value << h.exact_spin_cap;
  out << YAML::EndMap;

  out << YAML::Key << "equations" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < p.equations.size(); ++i) {
    const Equation& eq = p.equations[i];
    out << YAML::BeginMap;
    if (i < p.equation_names.size())
      out << YAML::Key << "name" << YAML::Value << p.equation_names[i];
    out << YAML::Key << "weight" << YAML::Value << eq.weight();
    out << YAML::Key << "samples" << YAML::Value << YAML::BeginSeq;
    for (Eigen::Index r = 0; r < eq.n_samples(); ++r) {
      out << YAML::Flow << YAML::BeginSeq;
      for (int c = 0; c < eq.n_in(); ++c) out << eq.samples()(r, c);
      out << YAML::EndSeq;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "terms" << YAML::Value << YAML::BeginSeq;
    for (const Term& t : eq.terms()) {
      out << YAML::BeginMap;
      out << YAML::Key << "function" << YAML::Value << t.function_index;
      out << YAML::Key << "derivative" << YAML::Value << YAML::Flow
          << t.derivative.orders();
      out << YAML::Key << "coeff" << YAML::Value;
      emit_vector(out, t.coefficients);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "inhomogeneous" << YAML::Value;
    emit_vector(out, eq.inhomogeneous());
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace spinde
