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

#include "form_expr.hpp"
#include "test_support.hpp"
#include "triality/enumerator.hpp"
#include "triality/modular.hpp"
#include "triality/sw_curve.hpp"
#include "triality/verify.hpp"

using namespace triality;
using triality::cli::parse_poly;
using triality::testing::small_rational;
using triality::testing::uniform;

namespace {

constexpr int kOrder = 8;
constexpr int kT = 24 * kOrder;

CurvePolyAB ab(std::string_view s) { return parse_poly<ABVars>(s); }
CurvePolyCD cd(std::string_view s) { return parse_poly<CDVars>(s); }
IPoly ip(std::string_view s) { return parse_poly<IVars>(s); }

Invariant mod(const FracSeries& f, int w) { return Invariant::modular(f, w); }

// Leading q^0 coefficients of the curve coefficients in both frames.
const std::array<std::pair<const char*, const char*>, 6> kLeadingAB{{
    {"a0", "1/12"},
    {"a2", "I4 + It4/4 - 64*I2^2"},
    {"b0", "1/216"},
    {"b1", "I2"},
    {"b2", "-I4/6 + It4/48 + 128/3*I2^2"},
    {"b3", "I6/16 - 4*I2*I4 + I2*It4 + 512*I2^3"},
}};
const std::array<std::pair<const char*, const char*>, 6> kLeadingCD{{
    {"c0", "1/12"},
    {"c1", "-12*I2"},
    {"c2", "I4 + It4/4 + 368*I2^2"},
    {"d0", "1/216"},
    {"d2", "-I4/6 + It4/48 - 88/3*I2^2"},
    {"d3", "I6/16 + 8*I2*I4 - I2*It4/2 + 896*I2^3"},
}};

CurvePolyAB random_monomial() {
  CurvePolyAB::Exps e{};
  for (auto& x : e) x = uniform(0, 2);
  return CurvePolyAB::monomial(e, small_rational() + 10);
}

}  // namespace

TEST_CASE("gradings") {
  auto g = grading_of(ab("a0*b1"));
  REQUIRE(g.has_value());
  CHECK(g->weight == 12);
  CHECK(g->degree == 2);
  CHECK(g->d_a == 1);
  CHECK(g->d_b == 1);
  CHECK_FALSE(grading_of(ab("a0 + b0")).has_value());
  auto h = grading_of(cd("c1*d0"));
  REQUIRE(h.has_value());
  CHECK(*h == std::pair<int, int>{12, 2});
}

TEST_CASE("ab_to_cd examples") {
  CHECK(ab_to_cd(ab("a0")) == cd("c0"));
  CHECK(ab_to_cd(ab("b1")) == cd("-3/2*c1*d0") * CurvePolyCD::variable(kC0, -1));
  CHECK(ab_to_cd(ab("a2")) == cd("c2") - cd("c1^2/4") * CurvePolyCD::variable(kC0, -1));
  CHECK(ab_to_cd(ab("a0*b1")) == cd("-3/2*c1*d0"));
}

TEST_CASE("cd_to_ab examples") {
  CHECK(cd_to_ab(cd("c0")) == ab("a0"));
  CHECK(cd_to_ab(cd("c1")) == ab("-2/3*a0*b1") * CurvePolyAB::variable(kB0, -1));
  for (const char* x : {"a0", "a2", "b1", "b2", "b3"}) CHECK(cd_to_ab(ab_to_cd(ab(x))) == ab(x));
}

TEST_CASE("is_triality_invariant examples") {
  CHECK(is_triality_invariant(ab("a0*b1")));
  CHECK_FALSE(is_triality_invariant(ab("b1")));
  CHECK(is_triality_invariant(ab("a0^3 - 27*b0^2")));
  CHECK(ab_to_cd(ab("a0^3 - 27*b0^2")) == cd("c0^3 - 27*d0^2"));
}

TEST_CASE("evaluate examples") {
  const ModularSeries& ms = modular_series(kOrder);
  const KLMN& f = klmn(kOrder);
  CHECK(evaluate_ab(ab("a0"), kOrder) == mod(ms.E4 * Rational(1, 12), 4));
  CHECK(evaluate_ab(ab("b0"), kOrder) == mod(ms.E6 * Rational(1, 216), 6));
  CHECK(agrees_to(evaluate_ab(ab("b1"), kOrder), mod(ms.delta * ms.inv_E4, 8) * f.K, kT - 24));
  CHECK(agrees_to(evaluate_cd(cd("c1"), kOrder), mod(ms.delta * ms.inv_E6 * Rational(-12), 6) * f.K, kT - 24));
  CHECK(evaluate_cd(cd("d0"), kOrder) == mod(ms.E6 * Rational(1, 216), 6));
  CHECK(agrees_to(evaluate_cd(ab_to_cd(ab("a2")), kOrder), evaluate_ab(ab("a2"), kOrder), kT - 48));
}

TEST_CASE("recovery formulas") {
  const Recovery& r = recover_klmn();
  CHECK(r.ab[0] == ab("12*a0*b1"));
  CHECK(r.cd[0] == cd("-18*c1*d0"));
  CHECK(r.ab[1] == ab("-2*a0^4*b2 + 3*a0^3*a2*b0 + 54*a0*b0^2*b2 - 27*a0*b0*b1^2 - 81*a2*b0^3"));
  CHECK(r.cd[3] == cd("4*c0^6*d3 - 2*c0^5*c1*d2 + 3*c0^4*c1*c2*d0 - 5/4*c0^3*c1^3*d0 - 216*c0^3*d0^2*d3"
                      " + 54*c0^2*c1*d0^2*d2 - 81*c0*c1*c2*d0^3 - 27*c1^3*d0^3 + 2916*d0^4*d3"));

  const ModularSeries& ms = modular_series(kOrder);
  const KLMN& f = klmn(kOrder);
  Invariant d = mod(ms.delta, 12);
  std::array<Invariant, 4> want{d * f.K, d * d * f.L, d * d * f.M, d * d * d * f.N};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(agrees_to(evaluate_ab(r.ab[i], kOrder), want[i], kT - 48));
    CHECK(agrees_to(evaluate_cd(r.cd[i], kOrder), want[i], kT - 48));
    CHECK(ab_to_cd(r.ab[i]) == r.cd[i]);
  }
}

TEST_CASE("leading coefficients in both frames") {
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(kLeadingAB[i].first);
    CHECK(leading_ipoly(evaluate_ab(ab(kLeadingAB[i].first), kOrder)) == ip(kLeadingAB[i].second));
    CAPTURE(kLeadingCD[i].first);
    CHECK(leading_ipoly(evaluate_cd(cd(kLeadingCD[i].first), kOrder)) == ip(kLeadingCD[i].second));
  }
}

TEST_CASE("Jacobians of the leading coefficients") {
  auto z = [](std::size_t i, const auto& table) { return ipoly_to_zpoly(ip(table[i].second)); };
  ZPoly jab = jacobian_z(z(1, kLeadingAB), z(3, kLeadingAB), z(4, kLeadingAB), z(5, kLeadingAB));
  ZPoly jcd = jacobian_z(z(1, kLeadingCD), z(2, kLeadingCD), z(4, kLeadingCD), z(5, kLeadingCD));
  CHECK(jab == vandermonde_squares() * Rational(1, 32));
  CHECK(jcd == vandermonde_squares() * Rational(3, 8));
}

TEST_CASE("Jacobians in K, L, M, N") {
  const ModularSeries& ms = modular_series(kOrder);
  auto [jab, jcd] = jacobian_klmn(kOrder);
  FracSeries d3 = ms.delta.pow(3);
  CHECK(agrees_to(jab, d3 * ms.inv_E4 * Rational(-1, 16), kT));
  CHECK(agrees_to(jcd, d3 * ms.inv_E6 * Rational(-3, 4), kT));
  for (Frame fr : {Frame::ab, Frame::cd}) {
    KLMNSeriesPoly p = jacobian_klmn_poly(fr, kOrder);
    CHECK(p.size() == 1);
    CHECK(p.terms().begin()->first == KLMNSeriesPoly::Exps{});
  }
}

TEST_CASE("property: frame changes round trip") {
  for (int trial = 0; trial < 40; ++trial) {
    CurvePolyAB p = random_monomial() + random_monomial();
    CHECK(cd_to_ab(ab_to_cd(p)) == p);
  }
}

TEST_CASE("property: evaluate_ab is a graded homomorphism") {
  for (int trial = 0; trial < 12; ++trial) {
    CurvePolyAB p = random_monomial(), q = random_monomial();
    Invariant x = evaluate_ab(p, kOrder), y = evaluate_ab(q, kOrder);
    Invariant xy = evaluate_ab(p * q, kOrder);
    auto g = grading_of(p * q);
    CHECK(xy.weight() == g->weight);
    CHECK(xy.degree() == g->degree);
    CHECK(agrees_to(xy, x * y, std::min(xy.trunc(), (x * y).trunc())));
  }
  for (const char* v : {"a0", "a2", "b0", "b1", "b2", "b3"}) {
    auto g = grading_of(ab(v));
    Invariant x = evaluate_ab(ab(v), kOrder);
    CHECK(x.weight() == g->weight);
    CHECK(x.degree() == g->degree);
  }
}

TEST_CASE("property: enumerated invariants classify as invariant") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{12, 2}, {12, 4}, {16, 4}, {20, 6}, {24, 6}}) {
    for (const auto& p : triality_basis(k, m).basis) {
      CHECK(classify(evaluate_ab(p, kOrder)) == CuspClass::invariant);
    }
  }
}
