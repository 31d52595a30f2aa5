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
#include "triality/errors.hpp"
#include "triality/frac_series.hpp"
#include "triality/json_io.hpp"

using namespace triality;
using triality::testing::random_series;
using triality::testing::random_unit_series;
using triality::testing::uniform;

namespace {

FracSeries q(int n) { return FracSeries::monomial(24 * n, 1); }

}  // namespace

TEST_CASE("constant and monomial are exact") {
  FracSeries c = FracSeries::constant(Rational(3, 4));
  CHECK(c.is_exact());
  CHECK(c.coeff(0) == Rational(3, 4));
  CHECK(c.coeff(100) == 0);
  CHECK(FracSeries::monomial(12, 2).valuation() == 12);
  CHECK(FracSeries().is_exact_zero());
  CHECK_FALSE(FracSeries::zero(48).is_exact_zero());
  CHECK(FracSeries::zero(48).is_zero());
}

TEST_CASE("from_terms merges duplicates and drops terms past trunc") {
  FracSeries s = FracSeries::from_terms({{24, 1}, {0, 2}, {24, -1}, {48, 5}}, 48);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].exponent == 0);
  CHECK(s.trunc() == 48);
}

TEST_CASE("coefficient past the window throws") {
  FracSeries s = FracSeries::from_terms({{0, 1}}, 24);
  CHECK_THROWS_AS(s.coeff(24), std::out_of_range);
  CHECK(s.coeff(23) == 0);
}

TEST_CASE("sum truncates at the smaller window") {
  FracSeries a = FracSeries::from_terms({{0, 1}}, 48);
  FracSeries b = FracSeries::from_terms({{24, 1}, {72, 1}}, 96);
  FracSeries s = a + b;
  CHECK(s.trunc() == 48);
  CHECK(s.terms().size() == 2);
  CHECK((a + FracSeries::constant(5)).trunc() == 48);
}

TEST_CASE("product window is min(Ta + vb, Tb + va)") {
  FracSeries a = FracSeries::from_terms({{24, 1}}, 96);   // va = 24, Ta = 96
  FracSeries b = FracSeries::from_terms({{48, 1}}, 120);  // vb = 48, Tb = 120
  FracSeries p = a * b;
  CHECK(p.trunc() == std::min(96 + 48, 120 + 24));
  CHECK(p.coeff(72) == 1);
  CHECK((a * FracSeries::monomial(-24, 1)).trunc() == 72);
}

TEST_CASE("inverse of a truncated series") {
  // 1/(1 - q) = 1 + q + q^2 + ... to the same relative precision
  FracSeries a = (FracSeries::constant(1) - q(1)).truncated(24 * 5);
  FracSeries inv = invert(a);
  CHECK(inv.trunc() == 24 * 5);
  for (int n = 0; n < 5; ++n) CHECK(inv.coeff(24 * n) == 1);
  // q^2 (1 + q) : valuation 2, result valuation -2
  FracSeries b = (q(2) + q(3)).truncated(24 * 6);
  FracSeries ib = invert(b);
  CHECK(ib.valuation() == -48);
  CHECK(ib.trunc() == 24 * 6 - 2 * 48);
  CHECK(ib.coeff(-24) == -1);
}

TEST_CASE("inverse of exact series") {
  CHECK(invert(FracSeries::monomial(12, 4)) == FracSeries::monomial(-12, Rational(1, 4)));
  CHECK(invert(FracSeries::monomial(12, 4)).is_exact());
  CHECK_THROWS_AS(invert(FracSeries::constant(1) + q(1)), std::domain_error);
  CHECK_THROWS_AS(invert(FracSeries()), ZeroSeries);
  CHECK_THROWS_AS(invert(FracSeries::zero(48)), ZeroSeries);
}

TEST_CASE("equality compares the common window") {
  FracSeries a = FracSeries::from_terms({{0, 1}, {24, 2}}, 48);
  FracSeries b = FracSeries::from_terms({{0, 1}, {24, 2}, {48, 7}}, 96);
  CHECK(a == b);
  CHECK_FALSE(a == FracSeries::from_terms({{0, 1}}, 48));
}

TEST_CASE("shift and pow") {
  FracSeries a = (FracSeries::constant(1) + q(1)).truncated(240);
  FracSeries cube = a.pow(3);
  CHECK(cube.coeff(24) == 3);
  CHECK(cube.coeff(72) == 1);
  CHECK(a.shifted(12).trunc() == 252);
  CHECK(a.shifted(12).coeff(36) == 1);
  CHECK(a.pow(0) == FracSeries::constant(1));
}

TEST_CASE("text rendering in powers of q") {
  FracSeries s = FracSeries::from_terms({{0, 1}, {12, -2}, {24, Rational(1, 3)}, {3, 1}}, 72);
  CHECK(s.to_string() == "1 + q^(1/8) - 2*q^(1/2) + 1/3*q + O(q^3)");
  CHECK(FracSeries().to_string() == "0");
  CHECK(FracSeries::zero(24).to_string() == "O(q)");
}

TEST_CASE("property: ring axioms on random series") {
  for (int trial = 0; trial < 200; ++trial) {
    int T = 24 * uniform(2, 8);
    FracSeries a = random_series(uniform(-2, 2) * 12, T);
    FracSeries b = random_series(uniform(-2, 2) * 12, T + 12 * uniform(0, 4));
    FracSeries c = random_series(uniform(0, 2) * 12, T);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * FracSeries::constant(1) == a);
  }
}

TEST_CASE("property: a * invert(a) = 1 on the window") {
  for (int trial = 0; trial < 100; ++trial) {
    int v = 12 * uniform(-2, 3);
    FracSeries a = random_unit_series(v, v + 24 * uniform(1, 8), uniform(0, 1) ? 12 : 8);
    FracSeries p = a * invert(a);
    CHECK(p.trunc() == a.trunc() - v);
    CHECK(p == FracSeries::constant(1));
  }
}

TEST_CASE("property: json round trip") {
  for (int trial = 0; trial < 50; ++trial) {
    int lo = 12 * uniform(-3, 3);
    FracSeries a = random_series(lo, lo + 24 * uniform(1, 6), 3);
    FracSeries b = series_from_json(to_json(a));
    CHECK(b.trunc() == a.trunc());
    CHECK(b == a);
  }
  FracSeries exact = FracSeries::constant(Rational(-5, 7));
  CHECK(to_json(exact)["trunc"].is_null());
  CHECK(series_from_json(to_json(exact)).is_exact());
  CHECK(to_json(exact)["terms"][0][1] == "-5/7");
}
