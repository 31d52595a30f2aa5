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
#include <string_view>

#include "triality/frac_series.hpp"
#include "triality/poly.hpp"
#include "triality/weyl.hpp"

namespace triality {

/// Polynomial in I2, I4, I6, It4 with q-series coefficients.
using ISeriesPoly = Poly<IVars, FracSeries>;

/// Element of M_*(Gamma(2)) (x) R^{W(D4)} with declared (weight, degree).
///
/// Every stored I-monomial has z-degree equal to degree(); this is checked on
/// construction. The weight is metadata supplied by whoever builds the value
/// (it cannot be read off a truncated q-expansion) and is kept additive by
/// the arithmetic.
class Invariant {
 public:
  Invariant() = default;
  Invariant(ISeriesPoly poly, int weight, int degree);

  /// Degree-0 element f (x) 1.
  static Invariant modular(const FracSeries& f, int weight);
  /// Weight-0 element with constant coefficients.
  static Invariant from_ipoly(const IPoly& p);

  const ISeriesPoly& poly() const { return poly_; }
  int weight() const { return weight_; }
  int degree() const { return degree_; }

  /// Smallest truncation among the coefficients (kExact if all are exact).
  int trunc() const;
  FracSeries coefficient(const IPoly::Exps& e) const { return poly_.coefficient(e); }

  /// Throws std::invalid_argument unless the gradings match.
  Invariant& operator+=(const Invariant& o);
  Invariant& operator-=(const Invariant& o);
  Invariant operator-() const;
  friend Invariant operator+(Invariant a, const Invariant& b) { return a += b; }
  friend Invariant operator-(Invariant a, const Invariant& b) { return a -= b; }
  friend Invariant operator*(const Invariant& a, const Invariant& b);
  friend Invariant operator*(Invariant a, const Rational& s);
  friend Invariant operator*(const Rational& s, Invariant a) { return std::move(a) * s; }

  /// Gradings equal and coefficients agree on their common windows.
  friend bool operator==(const Invariant& a, const Invariant& b);

  Invariant truncated(int trunc) const;

 private:
  ISeriesPoly poly_;
  int weight_ = 0;
  int degree_ = 0;
};

struct KLMNVars {
  static constexpr std::size_t size = 4;
  static constexpr std::array<std::string_view, 4> names{"K", "L", "M", "N"};
  static constexpr std::array<int, 4> weights{0, 2, 4, 0};
  static constexpr std::array<int, 4> degrees{2, 4, 4, 6};
};

/// Exact members of M_*[K, L, M, N] written with E4, E6.
struct ModularKLMNVars {
  static constexpr std::size_t size = 6;
  static constexpr std::array<std::string_view, 6> names{"E4", "E6", "K", "L", "M", "N"};
  static constexpr std::array<int, 6> weights{4, 6, 0, 2, 4, 0};
  static constexpr std::array<int, 6> degrees{0, 0, 2, 4, 4, 6};
};

using KLMNSeriesPoly = Poly<KLMNVars, FracSeries>;
using ModularKLMNPoly = Poly<ModularKLMNVars>;

/// Polynomial in formal K, L, M, N with series coefficients and a declared
/// grading (coefficient weight + formal weights = weight).
struct KLMNPoly {
  KLMNSeriesPoly terms;
  int weight = 0;
  int degree = 0;
};

/// Result of express_in_klmn: the exact E4/E6 form and the same element as a
/// KLMNPoly with series coefficients.
struct KLMNRepresentation {
  ModularKLMNPoly exact;
  KLMNPoly series;
};

struct KLMN {
  Invariant K, L, M, N;
};

/// K = I2, L = sum e_i T_i, M = 12 sum e_i^2 T_i,
/// N = I6/4 - I2 I4/24 + I2^3/96, at the given q-order. Cached.
const KLMN& klmn(int order);

/// T_1, T_2, T_3 in I-coordinates.
std::array<IPoly, 3> t_polys();

/// Injection: the coefficient of I2^a I4^b I6^c It4^d is multiplied by
/// q^(-a-b-c-d/2).
Invariant inject(const Invariant& phi);

enum class CuspClass { invariant, weak_only, not_weak };
std::string_view to_string(CuspClass c);

/// invariant iff inject(phi) has only non-negative integer q-powers;
/// weak_only iff phi is a power series in q^(1/2) whose It4-odd part carries
/// the half-integral powers but inject(phi) has a pole; not_weak otherwise.
/// Verdicts are relative to the truncation window.
CuspClass classify(const Invariant& phi);

/// q^(1/2) -> -q^(1/2), It4 -> -It4. Throws UnsupportedLattice when an
/// exponent is not a multiple of q^(1/2).
Invariant t_action(const Invariant& phi);

/// q^0 coefficient of inject(phi). Throws HasPole for negative q-powers.
IPoly leading_ipoly(const Invariant& phi);

/// Unique representation of phi in M_*[K, L, M, N].
///
/// phi is first rewritten over the series ring by inverting the change of
/// variables (I2, I4, I6, It4) -> (K, L, M, N); each resulting coefficient
/// is then solved for exactly in the monomial basis E4^a E6^b of its weight.
/// Throws NoRepresentation when a coefficient is not a modular form of the
/// right weight, AmbiguousRepresentation when the window cannot separate the
/// E4/E6 monomials.
KLMNRepresentation express_in_klmn(const Invariant& phi);

/// Evaluates an E4/E6/K/L/M/N polynomial at the given q-order.
Invariant evaluate_modular_klmn(const ModularKLMNPoly& p, int weight, int degree, int order);

/// det d(f1..f4)/d(I2, I4, I6, It4).
ISeriesPoly jacobian_i(const ISeriesPoly& f1, const ISeriesPoly& f2, const ISeriesPoly& f3,
                       const ISeriesPoly& f4);

}  // namespace triality
