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
#include <optional>
#include <string_view>
#include <utility>

#include "triality/invariant.hpp"
#include "triality/poly.hpp"

namespace triality {

struct ABVars {
  static constexpr std::size_t size = 6;
  static constexpr std::array<std::string_view, 6> names{"a0", "a2", "b0", "b1", "b2", "b3"};
  static constexpr std::array<int, 6> weights{4, 8, 6, 8, 10, 12};
  static constexpr std::array<int, 6> degrees{0, 4, 0, 2, 4, 6};
  static constexpr std::array<int, 6> a_count{1, 1, 0, 0, 0, 0};
  static constexpr std::array<int, 6> b_count{0, 0, 1, 1, 1, 1};
};

struct CDVars {
  static constexpr std::size_t size = 6;
  static constexpr std::array<std::string_view, 6> names{"c0", "c1", "c2", "d0", "d2", "d3"};
  static constexpr std::array<int, 6> weights{4, 6, 8, 6, 10, 12};
  static constexpr std::array<int, 6> degrees{0, 2, 4, 0, 4, 6};
};

enum ABIndex : std::size_t { kA0, kA2, kB0, kB1, kB2, kB3 };
enum CDIndex : std::size_t { kC0, kC1, kC2, kD0, kD2, kD3 };

/// Element of Q[a0, a2, b0, b1, b2, b3] (b0 may appear with negative
/// exponent in the image of cd_to_ab).
using CurvePolyAB = Poly<ABVars>;
/// Element of Q[c0, c1, c2, d0, d2, d3] (c0 may appear with negative
/// exponent in the image of ab_to_cd).
using CurvePolyCD = Poly<CDVars>;

struct CurveGrading {
  int weight = 0;
  int degree = 0;
  int d_a = 0;
  int d_b = 0;
};

/// Common (weight, degree, d_a, d_b) of all monomials, if they agree.
std::optional<CurveGrading> grading_of(const CurvePolyAB& p);
std::optional<std::pair<int, int>> grading_of(const CurvePolyCD& p);

/// a_i = sum_j c_j C(2-j, 2-i) s^(i-j), b_i = sum_j d_j C(3-j, 3-i) s^(i-j)
/// with s = -c1/(2 c0) and no d1.
CurvePolyCD ab_to_cd(const CurvePolyAB& p);

/// c_i = sum_j a_j C(2-j, 2-i) r^(i-j), d_i = sum_j b_j C(3-j, 3-i) r^(i-j)
/// with r = -b1/(3 b0) and no a1.
CurvePolyAB cd_to_ab(const CurvePolyCD& p);

/// True iff ab_to_cd(p) has no negative power of c0.
bool is_triality_invariant(const CurvePolyAB& p);

enum class Frame { ab, cd };

/// Curve coefficients as polynomials in formal K, L, M, N with series
/// coefficients, in the order (a0, a2, b0, b1, b2, b3) or
/// (c0, c1, c2, d0, d2, d3).
const std::array<KLMNSeriesPoly, 6>& curve_klmn_forms(Frame frame, int order);

/// Images of the six curve coefficients in the invariant ring.
const std::array<Invariant, 6>& curve_invariants(Frame frame, int order);

/// Throws NotHomogeneous unless p is homogeneous in weight and degree.
Invariant evaluate_ab(const CurvePolyAB& p, int order);
Invariant evaluate_cd(const CurvePolyCD& p, int order);

/// Polynomials whose evaluations are Delta K, Delta^2 L, Delta^2 M,
/// Delta^3 N.
struct Recovery {
  std::array<CurvePolyAB, 4> ab;
  std::array<CurvePolyCD, 4> cd;
};
const Recovery& recover_klmn();

/// det d(a2, b1, b2, b3)/d(K, L, M, N) or det d(c1, c2, d2, d3)/d(K, L, M, N)
/// as a KLMN polynomial.
KLMNSeriesPoly jacobian_klmn_poly(Frame frame, int order);

/// The two determinants above, which are constants. Throws std::logic_error
/// if either still depends on K, L, M, N.
std::pair<FracSeries, FracSeries> jacobian_klmn(int order);

}  // namespace triality
