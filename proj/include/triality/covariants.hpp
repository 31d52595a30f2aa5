// Copyright 2026 The triality authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "triality/poly.hpp"
#include "triality/sw_curve.hpp"

namespace triality {

struct FormVars {
  static constexpr std::size_t size = 9;
  static constexpr std::array<std::string_view, 9> names{"alpha0", "alpha1", "alpha2", "beta0", "beta1",
                                                         "beta2",  "beta3",  "u",      "v"};
  /// Scaling weights under (u, v) -> (lambda^-1 u, lambda v) acting on
  /// coefficients: alpha_i -> 2 - 2i, beta_i -> 3 - 2i.
  static constexpr std::array<int, 9> scaling{2, 0, -2, 3, 1, -1, -3, 0, 0};
  static constexpr std::array<int, 9> alpha_count{1, 1, 1, 0, 0, 0, 0, 0, 0};
  static constexpr std::array<int, 9> beta_count{0, 0, 0, 1, 1, 1, 1, 0, 0};
  static constexpr std::array<int, 9> uv_count{0, 0, 0, 0, 0, 0, 0, 1, 1};
};

enum FormIndex : std::size_t { kAl0, kAl1, kAl2, kBe0, kBe1, kBe2, kBe3, kU, kV };

/// Polynomial in the coefficients of f and g and in (u, v). Semiinvariants
/// have no u, v; covariants are homogeneous in (u, v).
using FormPoly = Poly<FormVars>;

/// f = sum alpha_i u^(2-i) v^i.
FormPoly form_f();
/// g = sum beta_i u^(3-i) v^i.
FormPoly form_g();

/// Common (u, v)-degree of the monomials. Throws NotHomogeneous.
int uv_order(const FormPoly& p);

/// i-th transvectant of forms of orders n1, n2. Throws BadOrder if i < 0,
/// i exceeds n1 or n2, or the forms do not have the stated orders.
FormPoly transvectant(const FormPoly& f1, const FormPoly& f2, int i, int n1, int n2);
/// Same, with the orders read off the forms.
FormPoly transvectant(const FormPoly& f1, const FormPoly& f2, int i);

/// P(alpha'(kappa), beta'(kappa)) == P(alpha, beta) for the coefficients
/// alpha', beta' of f(u + kappa v, v), g(u + kappa v, v), identically in
/// kappa. Throws std::invalid_argument if P involves u or v.
bool is_semiinvariant(const FormPoly& p);

/// (u, v)-degree if u or v occurs, otherwise the scaling weight.
/// Throws NotHomogeneous if monomials disagree.
int order_of(const FormPoly& p);

/// u^omega * Phi(alpha_hat, beta_hat) with
/// alpha_hat_i = sum_{j >= i} alpha_j C(j, i) (v/u)^(j-i).
/// Throws NegativeOrder or NotPolynomial.
FormPoly roberts_to_covariant(const FormPoly& phi);

/// Psi(1, 0).
FormPoly roberts_to_semiinvariant(const FormPoly& psi);

struct HatCoefficients {
  std::array<FormPoly, 3> a;
  std::array<FormPoly, 4> b;
  std::array<FormPoly, 3> c;
  std::array<FormPoly, 4> d;
};

/// Coefficients of f and g re-expanded around u - alpha1/(2 alpha0)
/// (a, b) and u - beta1/(3 beta0) (c, d). Laurent in alpha0 resp. beta0.
const HatCoefficients& hat_coefficients();

/// a_i -> a_hat_i, b_j -> b_hat_j. Throws NotPolynomial if a negative power
/// of alpha0 survives.
FormPoly psi_forward(const CurvePolyAB& p);

/// alpha0 -> a0, alpha1 -> 0, alpha2 -> a2, beta_j -> b_j. Throws
/// std::invalid_argument if p involves u or v.
CurvePolyAB psi_inverse(const FormPoly& p);

struct Generator {
  std::string expression;  // e.g. "<f,g>1"
  FormPoly covariant;
  int d_a = 0;
  int d_b = 0;
  int m = 0;
  int omega = 0;
  int weight() const { return 3 * m + 2 * omega; }
};

/// The 15 transvectant generators, in the usual listing order.
const std::vector<Generator>& gordan_generators();

/// Dimension of joint semiinvariants of degrees (d_alpha, d_beta) and order
/// omega, by exact linear algebra on all candidate monomials.
int semiinvariant_dimension(int d_alpha, int d_beta, int omega);

/// A reduced-echelon basis of the same space.
std::vector<FormPoly> semiinvariant_basis(int d_alpha, int d_beta, int omega);

}  // namespace triality
