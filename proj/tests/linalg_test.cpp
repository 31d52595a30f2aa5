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

#include "test_support.hpp"
#include "triality/linalg.hpp"

using namespace triality;
using triality::testing::small_rational;
using triality::testing::uniform;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(0, rows.empty() ? 0 : rows[0].size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Rational> mul(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace

TEST_CASE("kernel of the zero matrix is spanned by unit vectors") {
  auto k = rational_kernel(RationalMatrix(2, 2));
  REQUIRE(k.size() == 2);
  CHECK(k[0] == std::vector<Rational>{1, 0});
  CHECK(k[1] == std::vector<Rational>{0, 1});
}

TEST_CASE("kernel of the identity is empty") { CHECK(rational_kernel(RationalMatrix::identity(3)).empty()); }

TEST_CASE("kernel of [1, -1]") {
  auto k = rational_kernel(from_rows({{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{1, 1});
}

TEST_CASE("kernel of a matrix with no rows") {
  auto k = rational_kernel(RationalMatrix(0, 3));
  CHECK(k.size() == 3);
}

TEST_CASE("rref pivots and rank") {
  RowEchelon e = rref(from_rows({{0, 2, 4}, {1, 1, 1}, {1, 2, 3}}));
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced(0, 2) == -1);
  CHECK(e.reduced(1, 2) == 2);
}

TEST_CASE("solve reports consistency and kernel dimension") {
  std::size_t kd = 99;
  auto x = solve(from_rows({{1, 1}, {1, -1}}), {3, 1}, &kd);
  REQUIRE(x);
  CHECK(kd == 0);
  CHECK(*x == std::vector<Rational>{2, 1});
  CHECK_FALSE(solve(from_rows({{1, 1}, {2, 2}}), {1, 3}));
  auto y = solve(from_rows({{1, 1}}), {1}, &kd);
  REQUIRE(y);
  CHECK(kd == 1);
}

TEST_CASE("property: kernel vectors are annihilated and rank-nullity holds") {
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = uniform(1, 6), cols = uniform(1, 7);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(0, 2) ? Rational(0) : small_rational();
    }
    // make some rows dependent
    if (rows > 1 && uniform(0, 1)) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3;
    }
    auto k = rational_kernel(m);
    CHECK(k.size() + rref(m).rank() == cols);
    for (const auto& v : k) CHECK(all_zero(mul(m, v)));
    // reduced echelon: leading entries are 1 and strictly move right
    std::size_t last = 0;
    for (std::size_t r = 0; r < k.size(); ++r) {
      std::size_t lead = 0;
      while (sgn(k[r][lead]) == 0) ++lead;
      CHECK(k[r][lead] == 1);
      if (r > 0) CHECK(lead > last);
      last = lead;
    }
  }
}
