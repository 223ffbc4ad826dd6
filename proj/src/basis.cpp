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

#include "spinde/basis.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "spinde/error.hpp"

namespace spinde {
namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// k-th derivative of cos(a x) (is_sine false) or sin(a x).
double harmonic_derivative(bool is_sine, double a, int k, double x) {
  if (k == 0) return is_sine ? std::sin(a * x) : std::cos(a * x);
  const double factor = ipow(a, k);
  // Derivatives of sin cycle sin, cos, -sin, -cos; cos is a quarter ahead.
  const int phase = (k + (is_sine ? 0 : 1)) % 4;
  switch (phase) {
    case 0: return factor * std::sin(a * x);
    case 1: return factor * std::cos(a * x);
    case 2: return -factor * std::sin(a * x);
    default: return -factor * std::cos(a * x);
  }
}

// d^k/dx^k of cos^p(x) sin^q(x), expanded as a polynomial in (cos, sin).
double trig_derivative(int p, int q, int k, double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  if (k == 0) return ipow(c, p) * ipow(s, q);
  std::map<std::pair<int, int>, double> poly{{{p, q}, 1.0}};
  for (int step = 0; step < k; ++step) {
    std::map<std::pair<int, int>, double> next;
    for (const auto& [powers, coef] : poly) {
      const auto [a, b] = powers;
      if (a > 0) next[{a - 1, b + 1}] -= coef * a;
      if (b > 0) next[{a + 1, b - 1}] += coef * b;
    }
    poly = std::move(next);
  }
  double value = 0.0;
  for (const auto& [powers, coef] : poly)
    value += coef * ipow(c, powers.first) * ipow(s, powers.second);
  return value;
}

}  // namespace

std::string_view to_string(BasisFamily family) {
  switch (family) {
    case BasisFamily::fourier: return "fourier";
    case BasisFamily::monomial: return "monomial";
    case BasisFamily::trig: return "trig";
    case BasisFamily::gaussian: return "gaussian";
    case BasisFamily::multiquadric: return "multiquadric";
  }
  return "unknown";
}

BasisFamily parse_basis_family(std::string_view name) {
  for (auto f : {BasisFamily::fourier, BasisFamily::monomial,
                 BasisFamily::trig, BasisFamily::gaussian,
                 BasisFamily::multiquadric})
    if (to_string(f) == name) return f;
  throw ValidationError("unknown basis family '" + std::string(name) + "'");
}

Basis::Basis(BasisFamily family, int size_per_dim, int n_in, double scale,
             double frequency)
    : family_(family),
      size_per_dim_(size_per_dim),
      n_in_(n_in),
      scale_(scale),
      frequency_(frequency),
      dimension_(1) {
  if (size_per_dim < 1) throw ValidationError("basis size_per_dim must be >= 1");
  if (n_in < 1) throw ValidationError("basis n_in must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ValidationError("basis scale must be positive and finite");
  if (!(frequency > 0.0) || !std::isfinite(frequency))
    throw ValidationError("basis frequency must be positive and finite");
  for (int j = 0; j < n_in; ++j) {
    if (dimension_ > std::numeric_limits<std::size_t>::max() /
                         static_cast<std::size_t>(size_per_dim))
      throw ValidationError("basis dimension overflows");
    dimension_ *= static_cast<std::size_t>(size_per_dim);
  }
}

void Basis::check(std::size_t m, std::size_t x_size) const {
  if (m >= dimension_)
    throw IndexError("basis index " + std::to_string(m) + " out of range [0, " +
                     std::to_string(dimension_) + ")");
  if (x_size != static_cast<std::size_t>(n_in_))
    throw ShapeError("point has " + std::to_string(x_size) +
                     " coordinates, basis expects " + std::to_string(n_in_));
}

std::vector<int> Basis::split_index(std::size_t m) const {
  std::vector<int> parts(static_cast<std::size_t>(n_in_));
  const auto d = static_cast<std::size_t>(size_per_dim_);
  for (auto& p : parts) {
    p = static_cast<int>(m % d);
    m /= d;
  }
  return parts;
}

std::vector<double> Basis::center(std::size_t m) const {
  std::vector<double> z;
  z.reserve(static_cast<std::size_t>(n_in_));
  for (int part : split_index(m))
    z.push_back(size_per_dim_ == 1
                    ? 0.5
                    : static_cast<double>(part) / (size_per_dim_ - 1));
  return z;
}

double Basis::eval_1d(int index, int order, double x) const {
  switch (family_) {
    case BasisFamily::fourier: {
      const int n = index / 2;
      if (index % 2 == 0)
        return harmonic_derivative(false, n * frequency_, order, x);
      return harmonic_derivative(true, (n + 1) * frequency_, order, x);
    }
    case BasisFamily::monomial: {
      if (order > index) return 0.0;
      double coef = 1.0;
      for (int i = 0; i < order; ++i) coef *= index - i;
      return coef * ipow(x, index - order);
    }
    case BasisFamily::trig:
      return trig_derivative(size_per_dim_ - index - 1, index, order, x);
    default:
      throw CapabilityError("eval_1d is only defined for tensor-product bases");
  }
}

double Basis::eval(std::size_t m, std::span<const double> x) const {
  return eval_derivative(m, MultiIndex::zero(n_in_), x);
}

double Basis::eval_derivative(std::size_t m, const MultiIndex& k,
                              std::span<const double> x) const {
  check(m, x.size());
  if (k.size() != static_cast<std::size_t>(n_in_))
    throw ShapeError("derivative multi-index has " + std::to_string(k.size()) +
                     " entries, basis expects " + std::to_string(n_in_));
  if (is_radial()) return radial_derivative(m, k, x);
  const auto parts = split_index(m);
  double value = 1.0;
  for (std::size_t j = 0; j < parts.size(); ++j)
    value *= eval_1d(parts[j], k[j], x[j]);
  return value;
}

double Basis::radial_derivative(std::size_t m, const MultiIndex& k,
                                std::span<const double> x) const {
  const int order = k.total_order();
  if (order > kMaxRadialOrder)
    throw CapabilityError(std::string(name()) +
                          " basis supports derivatives up to total order " +
                          std::to_string(kMaxRadialOrder) + ", got " +
                          std::to_string(order));
  const auto z = center(m);
  std::vector<double> u(x.size());
  double r2 = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    u[j] = x[j] - z[j];
    r2 += u[j] * u[j];
  }
  // Coordinates being differentiated; i == j for a pure second derivative.
  std::size_t i = 0, j = 0;
  if (order >= 1) {
    int seen = 0;
    for (std::size_t c = 0; c < k.size(); ++c) {
      for (int rep = 0; rep < k[c]; ++rep) (seen++ == 0 ? i : j) = c;
    }
  }
  const double lam2 = scale_ * scale_;

  if (family_ == BasisFamily::gaussian) {
    const double e = std::exp(-r2 / lam2);
    if (order == 0) return -e;
    if (order == 1) return 2.0 * u[i] / lam2 * e;
    return e * ((i == j ? 2.0 / lam2 : 0.0) - 4.0 * u[i] * u[j] / (lam2 * lam2));
  }
  const double rho = std::sqrt(r2 + lam2);
  if (order == 0) return rho;
  if (order == 1) return u[i] / rho;
  return (i == j ? 1.0 / rho : 0.0) - u[i] * u[j] / (rho * rho * rho);
}

}  // namespace spinde
