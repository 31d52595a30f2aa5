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

#include <vector>

#include "triality/linalg.hpp"
#include "triality/sw_curve.hpp"

namespace triality {

struct AnsatzBasis {
  int weight = 0;
  int degree = 0;
  std::vector<CurvePolyAB::Exps> monomials;
  /// Reduced row echelon over `monomials`, leading coefficient 1.
  std::vector<CurvePolyAB> basis;
};

/// Monomials in (a0, a2, b0, b1, b2, b3) of weight k and degree m, largest
/// first in graded lex order.
std::vector<CurvePolyAB::Exps> monomials_of(int k, int m);

/// Basis of the triality invariants of weight k and degree m: the kernel of
/// the map sending an ansatz to the coefficients of its negative c0-powers.
AnsatzBasis triality_basis(int k, int m);

/// table[k][m] = dim of triality invariants for 0 <= k <= k_max,
/// 0 <= m <= m_max (zero for odd k or m). Cells are computed in parallel.
std::vector<std::vector<int>> dimension_table(int k_max, int m_max);

/// Coefficients r(0..m_max) of 1/((1-x^2)(1-x^4)^2(1-x^6)).
std::vector<int> rank_series(int m_max);

/// g(k) = D(k) - D(k-4) - D(k-6) + D(k-10) for a column D of the dimension
/// table: the number of free M_*-module generators of weight k.
std::vector<int> free_generator_counts(const std::vector<int>& column);

}  // namespace triality
