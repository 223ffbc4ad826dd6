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

#include <cstddef>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "spinde/equations.hpp"

namespace spinde {

enum class BasisFamily { fourier, monomial, trig, gaussian, multiquadric };

std::string_view to_string(BasisFamily family);
// Accepts "fourier", "monomial", "trig", "gaussian", "multiquadric".
BasisFamily parse_basis_family(std::string_view name);

/// A finite family of functions Phi_m : R^n_in -> R.
///
/// fourier, monomial and trig are tensor products of a one-dimensional family
/// phi_0..phi_{d-1}; the flat index decomposes as m = m_1 + m_2 d + ... with
/// m_1 belonging to the first coordinate. gaussian and multiquadric are radial
/// functions phi(|x - z_m|) around the points z_m of an equally spaced
/// d^n_in lattice on [0, 1]^n_in, flattened the same way.
///
/// One-dimensional families:
///   fourier    phi_{2n}(x) = cos(n w x), phi_{2n+1}(x) = sin((n+1) w x)
///   monomial   phi_m(x) = x^m
///   trig       phi_m(x) = cos^{d-m-1}(x) sin^m(x)
/// Radial profiles, with scale lambda:
///   gaussian      phi(r) = -exp(-(r / lambda)^2)
///   multiquadric  phi(r) = sqrt(r^2 + lambda^2)
class Basis {
 public:
  static constexpr int kMaxRadialOrder = 2;

  Basis(BasisFamily family, int size_per_dim, int n_in = 1, double scale = 1.0,
        double frequency = std::numbers::pi);

  BasisFamily family() const { return family_; }
  std::string_view name() const { return to_string(family_); }
  int size_per_dim() const { return size_per_dim_; }
  int n_in() const { return n_in_; }
  double scale() const { return scale_; }
  double frequency() const { return frequency_; }
  std::size_t dimension() const { return dimension_; }
  bool is_radial() const {
    return family_ == BasisFamily::gaussian ||
           family_ == BasisFamily::multiquadric;
  }

  double eval(std::size_t m, std::span<const double> x) const;

  // Exact partial derivative d^k Phi_m(x). Radial families support total
  // order <= 2 and throw CapabilityError beyond that.
  double eval_derivative(std::size_t m, const MultiIndex& k,
                         std::span<const double> x) const;

  // Per-coordinate indices (m_1, m_2, ...) of a flat index.
  std::vector<int> split_index(std::size_t m) const;

  // Lattice point z_m of a radial basis (also defined for the other
  // families, where it is unused).
  std::vector<double> center(std::size_t m) const;

  // Order-th derivative of the one-dimensional function phi_index at x, for
  // tensor-product families.
  double eval_1d(int index, int order, double x) const;

 private:
  double radial_derivative(std::size_t m, const MultiIndex& k,
                           std::span<const double> x) const;
  void check(std::size_t m, std::size_t x_size) const;

  BasisFamily family_;
  int size_per_dim_;
  int n_in_;
  double scale_;
  double frequency_;
  std::size_t dimension_;
};

}  // namespace spinde
