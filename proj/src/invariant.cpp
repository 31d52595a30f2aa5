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

#include "triality/invariant.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "triality/determinant.hpp"
#include "triality/errors.hpp"
#include "triality/linalg.hpp"
#include "triality/modular.hpp"

namespace triality {

namespace {

void require_same_grading(const Invariant& a, const Invariant& b) {
  if (a.weight() != b.weight() || a.degree() != b.degree()) {
    throw std::invalid_argument("adding invariants of different (weight, degree)");
  }
}

ISeriesPoly lift(const IPoly& p) {
  return p.map_coefficients([](const Rational& c) { return FracSeries::constant(c); });
}

int order_for(int trunc) {
  if (trunc >= FracSeries::kExact) return 24;
  int order = (trunc + FracSeries::kLattice - 1) / FracSeries::kLattice;
  return std::max(order, 2);
}

// Coefficients (of I4, It4) of an element of the form c4*(I4 - I2^2/4) + ct4*It4.
std::pair<FracSeries, FracSeries> linear_part(const Invariant& x, std::string_view name) {
  FracSeries c4 = x.coefficient({0, 1, 0, 0});
  FracSeries ct4 = x.coefficient({0, 0, 0, 1});
  FracSeries c22 = x.coefficient({2, 0, 0, 0});
  if (x.poly().size() > 3 || !(c22 * Rational(4) + c4).is_zero()) {
    throw std::logic_error(std::string(name) + " is not linear in I4 - I2^2/4 and It4");
  }
  return {c4, ct4};
}

std::vector<std::pair<int, int>> e4e6_exponents(int weight) {
  std::vector<std::pair<int, int>> out;
  if (weight < 0 || weight % 2 != 0) return out;
  for (int b = weight / 6; b >= 0; --b) {
    int rest = weight - 6 * b;
    if (rest % 4 == 0) out.emplace_back(rest / 4, b);
  }
  return out;
}

}  // namespace

Invariant::Invariant(ISeriesPoly poly, int weight, int degree)
    : poly_(std::move(poly)), weight_(weight), degree_(degree) {
  for (const auto& [e, c] : poly_.terms()) {
    if (ipoly_monomial_degree(e) != degree_) {
      throw NotHomogeneous("monomial of degree " + std::to_string(ipoly_monomial_degree(e)) +
                           " in an invariant of degree " + std::to_string(degree_));
    }
  }
}

Invariant Invariant::modular(const FracSeries& f, int weight) {
  return Invariant(ISeriesPoly::constant(f), weight, 0);
}

Invariant Invariant::from_ipoly(const IPoly& p) {
  auto deg = ipoly_degree(p);
  if (!deg && !p.is_zero()) throw NotHomogeneous("I-polynomial is not homogeneous");
  return Invariant(lift(p), 0, deg.value_or(0));
}

int Invariant::trunc() const {
  int t = FracSeries::kExact;
  for (const auto& [e, c] : poly_.terms()) t = std::min(t, c.trunc());
  return t;
}

Invariant& Invariant::operator+=(const Invariant& o) {
  require_same_grading(*this, o);
  poly_ += o.poly_;
  return *this;
}

Invariant& Invariant::operator-=(const Invariant& o) {
  require_same_grading(*this, o);
  poly_ -= o.poly_;
  return *this;
}

Invariant Invariant::operator-() const { return Invariant(-poly_, weight_, degree_); }

Invariant operator*(const Invariant& a, const Invariant& b) {
  return Invariant(a.poly_ * b.poly_, a.weight_ + b.weight_, a.degree_ + b.degree_);
}

Invariant operator*(Invariant a, const Rational& s) {
  a.poly_ = a.poly_ * s;
  return a;
}

bool operator==(const Invariant& a, const Invariant& b) {
  return a.weight_ == b.weight_ && a.degree_ == b.degree_ && a.poly_ == b.poly_;
}

Invariant Invariant::truncated(int trunc) const {
  return Invariant(poly_.map_coefficients([trunc](const FracSeries& c) { return c.truncated(trunc); }),
                   weight_, degree_);
}

std::array<IPoly, 3> t_polys() {
  IPoly I2 = IPoly::variable(kI2);
  IPoly I4 = IPoly::variable(kI4);
  IPoly It4 = IPoly::variable(kIt4);
  IPoly I2sq = I2 * I2;
  return {I4 * Rational(1, 6) - I2sq * Rational(1, 24),
          -I4 * Rational(1, 12) - It4 * Rational(1, 2) + I2sq * Rational(1, 48),
          -I4 * Rational(1, 12) + It4 * Rational(1, 2) + I2sq * Rational(1, 48)};
}

const KLMN& klmn(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KLMN>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) {
    const ModularSeries& ms = modular_series(order);
    auto T = t_polys();
    const FracSeries* e[3] = {&ms.e1, &ms.e2, &ms.e3};
    ISeriesPoly L, M;
    for (int i = 0; i < 3; ++i) {
      ISeriesPoly Ti = lift(T[i]);
      L += Ti.scaled_by(*e[i]);
      M += Ti.scaled_by(*e[i] * *e[i] * Rational(12));
    }
    IPoly I2 = IPoly::variable(kI2);
    IPoly N = IPoly::variable(kI6) * Rational(1, 4) - I2 * IPoly::variable(kI4) * Rational(1, 24) +
              I2.pow(3) * Rational(1, 96);
    slot = std::make_unique<KLMN>(KLMN{Invariant(lift(I2), 0, 2), Invariant(L, 2, 4),
                                       Invariant(M, 4, 4), Invariant(lift(N), 0, 6)});
  }
  return *slot;
}

Invariant inject(const Invariant& phi) {
  ISeriesPoly out;
  for (const auto& [e, c] : phi.poly().terms()) {
    int shift = -FracSeries::kLattice * (e[kI2] + e[kI4] + e[kI6]) - FracSeries::kLattice / 2 * e[kIt4];
    out.add_term(e, c.shifted(shift));
  }
  return Invariant(std::move(out), phi.weight(), phi.degree());
}

std::string_view to_string(CuspClass c) {
  switch (c) {
    case CuspClass::invariant:
      return "invariant";
    case CuspClass::weak_only:
      return "weak_only";
    case CuspClass::not_weak:
      return "not_weak";
  }
  return "";
}

CuspClass classify(const Invariant& phi) {
  bool regular = true;
  const Invariant injected = inject(phi);
  for (const auto& [e, c] : injected.poly().terms()) {
    for (const auto& t : c.terms()) {
      if (t.exponent < 0 || t.exponent % FracSeries::kLattice != 0) regular = false;
    }
  }
  if (regular) return CuspClass::invariant;
  const int half = FracSeries::kLattice / 2;
  for (const auto& [e, c] : phi.poly().terms()) {
    int parity = e[kIt4] % 2;
    for (const auto& t : c.terms()) {
      if (t.exponent < 0 || t.exponent % half != 0) return CuspClass::not_weak;
      if ((t.exponent / half) % 2 != parity) return CuspClass::not_weak;
    }
  }
  return CuspClass::weak_only;
}

Invariant t_action(const Invariant& phi) {
  const int half = FracSeries::kLattice / 2;
  ISeriesPoly out;
  for (const auto& [e, c] : phi.poly().terms()) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& t : c.terms()) {
      if (t.exponent % half != 0) {
        throw UnsupportedLattice("q-exponent " + std::to_string(t.exponent) +
                                 "/24 is not a multiple of 1/2");
      }
      bool flip = ((t.exponent / half) + e[kIt4]) % 2 != 0;
      terms.emplace_back(t.exponent, flip ? Rational(-t.coeff) : t.coeff);
    }
    out.add_term(e, FracSeries::from_terms(std::move(terms), c.trunc()));
  }
  return Invariant(std::move(out), phi.weight(), phi.degree());
}

IPoly leading_ipoly(const Invariant& phi) {
  IPoly out;
  const Invariant injected = inject(phi);
  for (const auto& [e, c] : injected.poly().terms()) {
    if (auto v = c.valuation(); v && *v < 0) {
      throw HasPole("injected invariant has a pole at the cusp");
    }
    out.add_term(e, c.coeff(0));
  }
  return out;
}

KLMNRepresentation express_in_klmn(const Invariant& phi) {
  const int order = order_for(phi.trunc());
  const KLMN& b = klmn(order);
  const ModularSeries& ms = modular_series(order);

  // L = l4 X + lt4 It4 and M = m4 X + mt4 It4 with X = I4 - I2^2/4.
  auto [l4, lt4] = linear_part(b.L, "L");
  auto [m4, mt4] = linear_part(b.M, "M");
  FracSeries det_inv = invert(l4 * mt4 - lt4 * m4);
  KLMNSeriesPoly K = KLMNSeriesPoly::variable(0);
  KLMNSeriesPoly L = KLMNSeriesPoly::variable(1);
  KLMNSeriesPoly M = KLMNSeriesPoly::variable(2);
  KLMNSeriesPoly N = KLMNSeriesPoly::variable(3);
  KLMNSeriesPoly X = L.scaled_by(mt4 * det_inv) - M.scaled_by(lt4 * det_inv);
  KLMNSeriesPoly Y = M.scaled_by(l4 * det_inv) - L.scaled_by(m4 * det_inv);
  KLMNSeriesPoly I4 = X + K * K * Rational(1, 4);
  KLMNSeriesPoly I6 = N * Rational(4) + K * I4 * Rational(1, 6) - K.pow(3) * Rational(1, 24);

  PowerCache<KLMNSeriesPoly> cache({K, I4, I6, Y}, KLMNSeriesPoly::constant(FracSeries::constant(1)));
  KLMNSeriesPoly F = substitute(phi.poly(), cache,
                                [](const FracSeries& c) { return KLMNSeriesPoly::constant(c); });

  KLMNRepresentation rep;
  rep.series.weight = phi.weight();
  rep.series.degree = phi.degree();
  std::map<std::pair<int, int>, FracSeries> basis_cache;
  for (const auto& [e, s] : F.terms()) {
    if (s.is_zero()) continue;
    rep.series.terms.add_term(e, s);
    int w = phi.weight() - 2 * e[1] - 4 * e[2];
    auto exps = e4e6_exponents(w);
    if (exps.empty()) {
      throw NoRepresentation("coefficient of weight " + std::to_string(w) +
                             " cannot be a modular form for SL(2,Z)");
    }
    std::vector<FracSeries> basis;
    int window = s.trunc();
    for (auto ab : exps) {
      auto it = basis_cache.find(ab);
      if (it == basis_cache.end()) {
        it = basis_cache.emplace(ab, ms.E4.pow(ab.first) * ms.E6.pow(ab.second)).first;
      }
      basis.push_back(it->second);
      window = std::min(window, it->second.trunc());
    }
    std::set<int> rows;
    for (const auto& t : s.terms()) {
      if (t.exponent < window) rows.insert(t.exponent);
    }
    for (const auto& f : basis) {
      for (const auto& t : f.terms()) {
        if (t.exponent < window) rows.insert(t.exponent);
      }
    }
    RationalMatrix m(rows.size(), basis.size());
    std::vector<Rational> rhs;
    std::size_t r = 0;
    for (int x : rows) {
      for (std::size_t j = 0; j < basis.size(); ++j) m(r, j) = basis[j].coeff(x);
      rhs.push_back(s.coeff(x));
      ++r;
    }
    std::size_t kernel_dim = 0;
    auto sol = solve(m, rhs, &kernel_dim);
    if (!sol) throw NoRepresentation("coefficient is not in M_" + std::to_string(w));
    if (kernel_dim > 0) {
      throw AmbiguousRepresentation("q-window too short to separate the weight " +
                                    std::to_string(w) + " basis");
    }
    for (std::size_t j = 0; j < exps.size(); ++j) {
      ModularKLMNPoly::Exps me{exps[j].first, exps[j].second, e[0], e[1], e[2], e[3]};
      rep.exact.add_term(me, (*sol)[j]);
    }
  }
  return rep;
}

Invariant evaluate_modular_klmn(const ModularKLMNPoly& p, int weight, int degree, int order) {
  for (const auto& [e, c] : p.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < ModularKLMNVars::size; ++i) w += e[i] * ModularKLMNVars::weights[i];
    if (w != weight) throw NotHomogeneous("monomial weight " + std::to_string(w) + " != " + std::to_string(weight));
  }
  const ModularSeries& ms = modular_series(order);
  const KLMN& b = klmn(order);
  PowerCache<ISeriesPoly> cache({ISeriesPoly::constant(ms.E4), ISeriesPoly::constant(ms.E6), b.K.poly(),
                                 b.L.poly(), b.M.poly(), b.N.poly()},
                                ISeriesPoly::constant(FracSeries::constant(1)));
  ISeriesPoly out = substitute(p, cache, [](const Rational& c) {
    return ISeriesPoly::constant(FracSeries::constant(c));
  });
  return Invariant(std::move(out), weight, degree);
}

ISeriesPoly jacobian_i(const ISeriesPoly& f1, const ISeriesPoly& f2, const ISeriesPoly& f3,
                       const ISeriesPoly& f4) {
  const ISeriesPoly* f[4] = {&f1, &f2, &f3, &f4};
  std::array<std::array<ISeriesPoly, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = f[i]->derivative(j);
  }
  return determinant(m);
}

}  // namespace triality
