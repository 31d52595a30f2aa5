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

#include <doctest.h>

#include <algorithm>

#include "form_expr.hpp"
#include "triality/covariants.hpp"
#include "triality/enumerator.hpp"
#include "triality/sw_curve.hpp"

using namespace triality;
using triality::cli::parse_poly;

namespace {

CurvePolyAB ab(std::string_view s) { return parse_poly<ABVars>(s); }
CurvePolyAB::Exps exps(std::string_view s) { return ab(s).terms().begin()->first; }

// Coefficients of 1/((1-x^2)(1-x^4)^2(1-x^6)) by direct counting.
int rank_oracle(int m) {
  int n = 0;
  for (int a = 0; 2 * a <= m; ++a)
    for (int b = 0; 2 * a + 4 * b <= m; ++b)
      for (int c = 0; 2 * a + 4 * b + 4 * c <= m; ++c)
        if ((m - 2 * a - 4 * b - 4 * c) % 6 == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("monomials_of examples") {
  auto m12 = monomials_of(12, 0);
  REQUIRE(m12.size() == 2);
  CHECK(std::find(m12.begin(), m12.end(), exps("a0^3")) != m12.end());
  CHECK(std::find(m12.begin(), m12.end(), exps("b0^2")) != m12.end());
  auto m122 = monomials_of(12, 2);
  REQUIRE(m122.size() == 1);
  CHECK(m122[0] == exps("a0*b1"));
  CHECK(monomials_of(4, 2).empty());
  CHECK(monomials_of(0, 0).size() == 1);
}

TEST_CASE("monomials_of gradings") {
  for (int k = 0; k <= 30; k += 2) {
    for (int m = 0; m <= 8; m += 2) {
      for (const auto& e : monomials_of(k, m)) {
        auto g = grading_of(CurvePolyAB::monomial(e, 1));
        CHECK(g->weight == k);
        CHECK(g->degree == m);
      }
    }
  }
}

TEST_CASE("triality_basis examples") {
  AnsatzBasis b = triality_basis(12, 2);
  REQUIRE(b.basis.size() == 1);
  CHECK(b.basis[0] == ab("a0*b1"));
  CHECK(triality_basis(10, 4).basis.empty());
  AnsatzBasis b0 = triality_basis(12, 0);
  CHECK(b0.basis.size() == 2);
  CHECK(b0.weight == 12);
  CHECK(b0.degree == 0);
}

TEST_CASE("basis is reduced echelon over invariants") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{16, 4}, {20, 4}, {24, 6}, {28, 6}, {30, 8}}) {
    AnsatzBasis b = triality_basis(k, m);
    std::vector<CurvePolyAB::Exps> pivots;
    for (const auto& p : b.basis) {
      CHECK(is_triality_invariant(p));
      auto g = grading_of(p);
      REQUIRE(g.has_value());
      CHECK(g->weight == k);
      CHECK(g->degree == m);
      // Leading monomial in the ansatz order carries coefficient 1.
      auto lead = std::find_if(b.monomials.begin(), b.monomials.end(),
                               [&](const auto& e) { return !is_zero(p.coefficient(e)); });
      REQUIRE(lead != b.monomials.end());
      CHECK(p.coefficient(*lead) == 1);
      pivots.push_back(*lead);
    }
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      for (std::size_t j = 0; j < b.basis.size(); ++j) {
        if (i != j) CHECK(is_zero(b.basis[i].coefficient(pivots[j])));
      }
    }
  }
}

TEST_CASE("dimension table") {
  auto t = dimension_table(36, 8);
  REQUIRE(t.size() == 37);
  REQUIRE(t[0].size() == 9);
  CHECK(t[12][2] == 1);
  CHECK(t[12][0] == 2);
  for (int k = 0; k <= 36; ++k) {
    for (int m = 0; m <= 8; ++m) {
      if (k % 2 || m % 2 || k < 3 * m) CHECK(t[k][m] == 0);
    }
  }
  CHECK(dimension_table(36, 8) == t);
}

TEST_CASE("dimension table against the semiinvariant oracle") {
  auto t = dimension_table(30, 6);
  for (int k = 0; k <= 30; k += 2) {
    for (int m = 0; m <= 6; m += 2) {
      if (k < 3 * m) continue;
      int want = 0;
      for (int da = 0; 4 * da + m <= k; ++da) {
        int rest = k - m - 4 * da;
        if (rest % 6 == 0) want += semiinvariant_dimension(da, rest / 6, (k - 3 * m) / 2);
      }
      CAPTURE(k);
      CAPTURE(m);
      CHECK(t[k][m] == want);
    }
  }
}

TEST_CASE("rank series") {
  auto r = rank_series(30);
  REQUIRE(r.size() == 31);
  CHECK(r[0] == 1);
  CHECK(r[4] == 3);
  CHECK(r[6] == 4);
  for (int m = 0; m <= 30; ++m) CHECK(r[m] == rank_oracle(m));
}

TEST_CASE("free generator counts") {
  // Column of M_* itself: one generator in weight 0.
  std::vector<int> mstar;
  auto t = dimension_table(40, 0);
  for (int k = 0; k <= 40; ++k) mstar.push_back(t[k][0]);
  auto g = free_generator_counts(mstar);
  CHECK(g[0] == 1);
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] == 0);
  CHECK(free_generator_counts({1, 0, 0, 0, 1}) == std::vector<int>{1, 0, 0, 0, 0});
}
