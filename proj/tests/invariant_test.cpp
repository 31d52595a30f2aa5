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
#include "triality/covariants.hpp"
#include "triality/errors.hpp"
#include "triality/invariant.hpp"
#include "triality/modular.hpp"
#include "triality/sw_curve.hpp"
#include "triality/verify.hpp"

using namespace triality;
using triality::testing::random_series;
using triality::testing::small_rational;
using triality::testing::uniform;

namespace {

constexpr int kOrder = 8;
constexpr int kT = 24 * kOrder;

IPoly iv(std::size_t i) { return IPoly::variable(i); }

using MK = ModularKLMNPoly;
MK mk(std::size_t i) { return MK::variable(i); }
MK delta_mk() { return (mk(0).pow(3) - mk(1).pow(2)) * Rational(1, 1728); }

CurvePolyAB ab(std::size_t i) { return CurvePolyAB::variable(i); }

// Coefficient of t^e in every I-monomial, as a constant IPoly.
IPoly part(const Invariant& x, int e) {
  IPoly out;
  for (const auto& [exps, c] : x.poly().terms()) out.add_term(exps, c.coeff(e));
  return out;
}

bool window_equal(const Invariant& a, const Invariant& b, int trunc) {
  return a.weight() == b.weight() && a.degree() == b.degree() && a.truncated(trunc) == b.truncated(trunc);
}

Invariant random_invariant(int weight, int degree, int lo, int step) {
  ISeriesPoly p;
  for (const auto& e : imonomials_of_degree(degree)) {
    if (uniform(0, 1)) p.add_term(e, random_series(lo, lo + 120, step));
  }
  return Invariant(p, weight, degree);
}

}  // namespace

TEST_CASE("K, L, M, N gradings") {
  const KLMN& f = klmn(kOrder);
  CHECK(f.K.weight() == 0);
  CHECK(f.K.degree() == 2);
  CHECK(f.L.weight() == 2);
  CHECK(f.L.degree() == 4);
  CHECK(f.M.weight() == 4);
  CHECK(f.M.degree() == 4);
  CHECK(f.N.weight() == 0);
  CHECK(f.N.degree() == 6);
}

TEST_CASE("K is I2 with constant coefficient") {
  const KLMN& f = klmn(kOrder);
  CHECK(f.K.poly().size() == 1);
  CHECK(f.K.coefficient({1, 0, 0, 0}) == FracSeries::constant(1));
}

TEST_CASE("leading terms of L") {
  const KLMN& f = klmn(kOrder);
  IPoly t1 = t_polys()[0];
  CHECK(part(f.L, 0) == t1 * Rational(1, 4));
  CHECK(part(f.L, 0) == iv(kI4) * Rational(1, 24) - iv(kI2).pow(2) * Rational(1, 96));
  CHECK(part(f.L, 12) == iv(kIt4) * Rational(-2));
}

TEST_CASE("N has no q dependence") {
  const KLMN& f = klmn(kOrder);
  IPoly n = iv(kI6) * Rational(1, 4) - iv(kI2) * iv(kI4) * Rational(1, 24) + iv(kI2).pow(3) * Rational(1, 96);
  CHECK(f.N.trunc() == FracSeries::kExact);
  CHECK(f.N == Invariant::from_ipoly(n));
}

TEST_CASE("M against its defining sum") {
  const ModularSeries& ms = modular_series(kOrder);
  auto t = t_polys();
  std::array<const FracSeries*, 3> e{&ms.e1, &ms.e2, &ms.e3};
  ISeriesPoly m;
  for (int i = 0; i < 3; ++i) {
    for (const auto& [exps, c] : t[i].terms()) m.add_term(exps, (*e[i]) * (*e[i]) * c * Rational(12));
  }
  CHECK(window_equal(klmn(kOrder).M, Invariant(m, 4, 4), kT));
}

TEST_CASE("inject examples") {
  const KLMN& f = klmn(kOrder);
  const ModularSeries& ms = modular_series(kOrder);
  FracSeries k = inject(f.K).coefficient({1, 0, 0, 0});
  CHECK(k.valuation() == -24);
  CHECK(k == FracSeries::monomial(-24, 1));
  Invariant e4 = Invariant::modular(ms.E4, 4);
  CHECK(inject(e4) == e4);
  Invariant dk = Invariant::modular(ms.delta, 12) * f.K;
  FracSeries c = inject(dk).coefficient({1, 0, 0, 0});
  CHECK(c == ms.delta.shifted(-24));
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(24) == -24);
  CHECK(c.coeff(48) == 252);
  ISeriesPoly p;
  p.add_term({0, 0, 0, 1}, FracSeries::monomial(12, 1));
  CHECK(inject(Invariant(p, 0, 4)).coefficient({0, 0, 0, 1}) == FracSeries::constant(1));
}

TEST_CASE("classify examples") {
  const KLMN& f = klmn(kOrder);
  const ModularSeries& ms = modular_series(kOrder);
  CHECK(classify(Invariant::modular(ms.delta, 12) * f.K) == CuspClass::invariant);
  CHECK(classify(f.K) == CuspClass::weak_only);
  CHECK(classify(Invariant::modular(ms.E6, 6)) == CuspClass::invariant);
  CHECK(classify(f.L) == CuspClass::weak_only);
  CHECK(classify(Invariant::modular(ms.inv_delta, -12)) == CuspClass::not_weak);
  ISeriesPoly p;
  p.add_term({1, 0, 0, 0}, FracSeries::monomial(12, 1));
  CHECK(classify(Invariant(p, 0, 2)) == CuspClass::not_weak);
  CHECK(to_string(CuspClass::weak_only) == "weak_only");
}

TEST_CASE("t_action examples") {
  const KLMN& f = klmn(kOrder);
  ISeriesPoly p;
  p.add_term({0, 0, 0, 1}, FracSeries::monomial(12, 1));
  Invariant x(p, 0, 4);
  CHECK(t_action(x) == x);
  CHECK(t_action(f.K) == f.K);
  CHECK(t_action(f.L) == f.L);
  CHECK(t_action(f.M) == f.M);
  ISeriesPoly bad;
  bad.add_term({1, 0, 0, 0}, FracSeries::monomial(1, 1));
  CHECK_THROWS_AS(t_action(Invariant(bad, 0, 2)), UnsupportedLattice);
}

TEST_CASE("leading_ipoly examples") {
  CHECK(leading_ipoly(evaluate_ab(ab(kB1), kOrder)) == iv(kI2));
  CHECK(leading_ipoly(evaluate_ab(ab(kA2), kOrder)) ==
        iv(kI4) + iv(kIt4) * Rational(1, 4) - iv(kI2).pow(2) * Rational(64));
  CHECK(leading_ipoly(evaluate_cd(CurvePolyCD::variable(kD3), kOrder)) ==
        iv(kI6) * Rational(1, 16) + iv(kI2) * iv(kI4) * Rational(8) - iv(kI2) * iv(kIt4) * Rational(1, 2) +
            iv(kI2).pow(3) * Rational(896));
  CHECK_THROWS_AS(leading_ipoly(klmn(kOrder).K), HasPole);
}

TEST_CASE("express_in_klmn examples") {
  KLMNRepresentation r = express_in_klmn(evaluate_ab(ab(kA0) * ab(kB1), kOrder));
  CHECK(r.exact == delta_mk() * mk(2) * Rational(1, 12));
  CHECK(r.series.weight == 12);
  CHECK(r.series.degree == 2);
  FracSeries kc = r.series.terms.coefficient({1, 0, 0, 0});
  CHECK(agrees_to(kc, modular_series(kOrder).delta * Rational(1, 12), kT));

  KLMNRepresentation d = express_in_klmn(Invariant::modular(modular_series(kOrder).delta, 12));
  CHECK(d.exact == delta_mk());

  FormPoly ff = transvectant(form_f(), form_f(), 2);
  KLMNRepresentation t = express_in_klmn(evaluate_ab(psi_inverse(roberts_to_semiinvariant(ff)), kOrder));
  MK want = (delta_mk() * mk(2).pow(2) * Rational(6) - mk(0) * mk(1) * mk(3) + mk(0).pow(2) * mk(4)) *
            Rational(1, 144);
  CHECK(t.exact == want);
}

TEST_CASE("express_in_klmn rejects elements outside the ring") {
  const ModularSeries& ms = modular_series(kOrder);
  CHECK_THROWS_AS(express_in_klmn(Invariant::modular(ms.delta, 10)), NoRepresentation);
  CHECK_THROWS_AS(express_in_klmn(Invariant::modular(ms.e1, 2)), NoRepresentation);
  CHECK_THROWS_AS(express_in_klmn(klmn(kOrder).M * Invariant::modular(ms.theta3_4, 0)),
                  NoRepresentation);
}

TEST_CASE("evaluate_modular_klmn round trip") {
  MK p = delta_mk() * mk(2) * mk(5) * Rational(3) + mk(1) * mk(3) * mk(4);
  Invariant x = evaluate_modular_klmn(p, 12, 8, kOrder);
  CHECK(x.weight() == 12);
  CHECK(x.degree() == 8);
  CHECK(express_in_klmn(x).exact == p);
  CHECK_THROWS_AS(evaluate_modular_klmn(p, 10, 8, kOrder), NotHomogeneous);
}

TEST_CASE("construction rejects mixed degrees") {
  ISeriesPoly p;
  p.add_term({1, 0, 0, 0}, FracSeries::constant(1));
  p.add_term({0, 1, 0, 0}, FracSeries::constant(1));
  CHECK_THROWS_AS(Invariant(p, 0, 2), NotHomogeneous);
  CHECK_THROWS_AS(klmn(kOrder).K + klmn(kOrder).L, std::invalid_argument);
}

TEST_CASE("Jacobian of K, L, M, N in I-coordinates") {
  const KLMN& f = klmn(kOrder);
  ISeriesPoly j = jacobian_i(f.K.poly(), f.L.poly(), f.M.poly(), f.N.poly());
  REQUIRE(j.size() == 1);
  FracSeries want = modular_series(kOrder).eta.pow(12) * Rational(-1, 16);
  CHECK(agrees_to(j.coefficient({0, 0, 0, 0}), want, kT));
}

TEST_CASE("property: inject is injective on the window") {
  for (int trial = 0; trial < 30; ++trial) {
    int m = 2 * uniform(0, 4);
    Invariant a = random_invariant(4, m, 0, 12);
    Invariant b = random_invariant(4, m, 0, 12);
    CHECK((inject(a) == inject(b)) == (a == b));
    CHECK(inject(a) == inject(a));
  }
}

TEST_CASE("property: products of invariants are invariant") {
  const ModularSeries& ms = modular_series(kOrder);
  const Recovery& rec = recover_klmn();
  std::vector<Invariant> pool{Invariant::modular(ms.E4, 4), Invariant::modular(ms.E6, 6),
                              Invariant::modular(ms.delta, 12)};
  for (const auto& p : rec.ab) pool.push_back(evaluate_ab(p, kOrder));
  for (const auto& x : pool) REQUIRE(classify(x) == CuspClass::invariant);
  for (int trial = 0; trial < 15; ++trial) {
    const Invariant& x = pool[uniform(0, static_cast<int>(pool.size()) - 1)];
    const Invariant& y = pool[uniform(0, static_cast<int>(pool.size()) - 1)];
    CHECK(classify(x * y) == CuspClass::invariant);
  }
}

TEST_CASE("property: t_action is an involutive ring homomorphism") {
  for (int trial = 0; trial < 25; ++trial) {
    Invariant a = random_invariant(2, 4, 0, 12);
    Invariant b = random_invariant(2, 4, 0, 12);
    Invariant c = random_invariant(0, 2, 12, 12);
    Rational s = small_rational();
    CHECK(t_action(t_action(a)) == a);
    CHECK(t_action(a + b) == t_action(a) + t_action(b));
    CHECK(t_action(a * c) == t_action(a) * t_action(c));
    CHECK(t_action(a * s) == t_action(a) * s);
  }
}
