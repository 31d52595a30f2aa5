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

#include "triality/poly.hpp"

namespace triality {

struct ZVars {
  static constexpr std::size_t size = 4;
  static constexpr std::array<std::string_view, 4> names{"z1", "z2", "z3", "z4"};
};

/// Weyl generators of W(D4): I2, I4, I6 and the Pfaffian-type I4~ = z1z2z3z4.
struct IVars {
  static constexpr std::size_t size = 4;
  static constexpr std::array<std::string_view, 4> names{"I2", "I4", "I6", "It4"};
  static constexpr std::array<int, 4> degrees{2, 4, 6, 4};
};

enum IIndex : std::size_t { kI2, kI4, kI6, kIt4 };

using ZPoly = Poly<ZVars>;
using IPoly = Poly<IVars>;

struct WeylGenerators {
  ZPoly I2, I4, I6, It4;
};

/// I2 = sum z_i^2, I4 = sum_{i<j} z_i^2 z_j^2, I6 = sum_{i<j<k} z_i^2 z_j^2 z_k^2,
/// It4 = z1 z2 z3 z4.
const WeylGenerators& weyl_generators();

/// Degree in z of an I-monomial: 2a + 4b + 6c + 4d.
int ipoly_monomial_degree(const IPoly::Exps& e);

/// The z-degree if every monomial agrees.
std::optional<int> ipoly_degree(const IPoly& p);

/// All I-monomials of z-degree m, in canonical order.
std::vector<IPoly::Exps> imonomials_of_degree(int m);

ZPoly ipoly_to_zpoly(const IPoly& p);

/// The unique IPoly expanding to p. Throws NotHomogeneous for a
/// non-homogeneous input and NotInvariant when p is not W(D4)-invariant.
IPoly zpoly_to_ipoly(const ZPoly& p);

/// det d(f1..f4)/d(z1..z4).
ZPoly jacobian_z(const ZPoly& f1, const ZPoly& f2, const ZPoly& f3, const ZPoly& f4);

/// prod_{i<j} (z_i^2 - z_j^2).
ZPoly vandermonde_squares();

/// Evaluates a ZPoly at a rational point.
Rational evaluate(const ZPoly& p, const std::array<Rational, 4>& z);

}  // namespace triality
