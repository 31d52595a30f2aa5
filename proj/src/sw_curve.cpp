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

#include "triality/sw_curve.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "triality/determinant.hpp"
#include "triality/errors.hpp"
#include "triality/modular.hpp"

namespace triality {

namespace {

template <class P>
P build(std::initializer_list<std::pair<Rational, typename P::Exps>> terms) {
  P p;
  for (const auto& [c, e] : terms) p.add_term(e, c);
  return p;
}

template <class Vars>
std::optional<std::pair<int, int>> weight_degree(const Poly<Vars>& p) {
  auto w = p.homogeneous_degree(Vars::weights);
  auto d = p.homogeneous_degree(Vars::degrees);
  if (p.is_zero()) return std::pair{0, 0};
  if (!w || !d) return std::nullopt;
  return std::pair{*w, *d};
}

std::array<CurvePolyCD, 6> ab_images() {
  // s = -c1/(2 c0)
  CurvePolyCD s = CurvePolyCD::monomial({-1, 1, 0, 0, 0, 0}, Rational(-1, 2));
  std::array<CurvePolyCD, 3> c{CurvePolyCD::variable(kC0), CurvePolyCD::variable(kC1),
                               CurvePolyCD::variable(kC2)};
  std::array<std::optional<CurvePolyCD>, 4> d{CurvePolyCD::variable(kD0), std::nullopt,
                                              CurvePolyCD::variable(kD2), CurvePolyCD::variable(kD3)};
  std::array<CurvePolyCD, 3> a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) a[i] += c[j] * s.pow(i - j) * Rational(binomial(2 - j, 2 - i));
  }
  std::array<CurvePolyCD, 4> b;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (d[j]) b[i] += *d[j] * s.pow(i - j) * Rational(binomial(3 - j, 3 - i));
    }
  }
  return {a[0], a[2], b[0], b[1], b[2], b[3]};
}

std::array<CurvePolyAB, 6> cd_images() {
  // r = -b1/(3 b0)
  CurvePolyAB r = CurvePolyAB::monomial({0, 0, -1, 1, 0, 0}, Rational(-1, 3));
  std::array<std::optional<CurvePolyAB>, 3> a{CurvePolyAB::variable(kA0), std::nullopt,
                                              CurvePolyAB::variable(kA2)};
  std::array<CurvePolyAB, 4> b{CurvePolyAB::variable(kB0), CurvePolyAB::variable(kB1),
                               CurvePolyAB::variable(kB2), CurvePolyAB::variable(kB3)};
  std::array<CurvePolyAB, 3> c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (a[j]) c[i] += *a[j] * r.pow(i - j) * Rational(binomial(2 - j, 2 - i));
    }
  }
  std::array<CurvePolyAB, 4> d;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j <= i; ++j) d[i] += b[j] * r.pow(i - j) * Rational(binomial(3 - j, 3 - i));
  }
  return {c[0], c[1], c[2], d[0], d[2], d[3]};
}

template <class R>
std::vector<R> to_vector(const std::array<R, 6>& a) {
  return std::vector<R>(a.begin(), a.end());
}

KLMNSeriesPoly klmn_term(const FracSeries& c, int k, int l, int m, int n) {
  return KLMNSeriesPoly::monomial({k, l, m, n}, c);
}

std::array<KLMNSeriesPoly, 6> make_forms(Frame frame, int order) {
  const ModularSeries& ms = modular_series(order);
  const FracSeries& E4 = ms.E4;
  const FracSeries& E6 = ms.E6;
  const FracSeries& D = ms.delta;
  const FracSeries& iE4 = ms.inv_E4;
  const FracSeries& iE6 = ms.inv_E6;
  if (frame == Frame::ab) {
    KLMNSeriesPoly a0 = klmn_term(E4 * Rational(1, 12), 0, 0, 0, 0);
    KLMNSeriesPoly a2 = klmn_term(D * iE4 * Rational(1, 4), 2, 0, 0, 0) +
                        klmn_term(E6 * Rational(-1, 24), 0, 1, 0, 0) +
                        klmn_term(E4 * Rational(1, 24), 0, 0, 1, 0);
    KLMNSeriesPoly b0 = klmn_term(E6 * Rational(1, 216), 0, 0, 0, 0);
    KLMNSeriesPoly b1 = klmn_term(D * iE4, 1, 0, 0, 0);
    KLMNSeriesPoly b2 = klmn_term(E6 * D * iE4 * iE4 * Rational(-1, 24), 2, 0, 0, 0) +
                        klmn_term(E4 * E4 * Rational(-1, 288), 0, 1, 0, 0) +
                        klmn_term(E6 * Rational(1, 288), 0, 0, 1, 0);
    KLMNSeriesPoly b3 = klmn_term(-(D * D * iE4.pow(3)), 3, 0, 0, 0) +
                        klmn_term(D * iE4 * Rational(1, 4), 1, 0, 1, 0) +
                        klmn_term(D * Rational(1, 4), 0, 0, 0, 1);
    return {a0, a2, b0, b1, b2, b3};
  }
  KLMNSeriesPoly c0 = klmn_term(E4 * Rational(1, 12), 0, 0, 0, 0);
  KLMNSeriesPoly c1 = klmn_term(D * iE6 * Rational(-12), 1, 0, 0, 0);
  KLMNSeriesPoly c2 = klmn_term(E4 * E4 * D * iE6 * iE6 * Rational(1, 4), 2, 0, 0, 0) +
                      klmn_term(E6 * Rational(-1, 24), 0, 1, 0, 0) +
                      klmn_term(E4 * Rational(1, 24), 0, 0, 1, 0);
  KLMNSeriesPoly d0 = klmn_term(E6 * Rational(1, 216), 0, 0, 0, 0);
  KLMNSeriesPoly d2 = klmn_term(E4 * D * iE6 * Rational(-1, 24), 2, 0, 0, 0) +
                      klmn_term(E4 * E4 * Rational(-1, 288), 0, 1, 0, 0) +
                      klmn_term(E6 * Rational(1, 288), 0, 0, 1, 0);
  KLMNSeriesPoly d3 = klmn_term(D * D * iE6 * iE6 * Rational(2), 3, 0, 0, 0) +
                      klmn_term(E4 * D * iE6 * Rational(1, 4), 1, 1, 0, 0) +
                      klmn_term(D * Rational(1, 4), 0, 0, 0, 1);
  return {c0, c1, c2, d0, d2, d3};
}

struct FrameOrderCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::unique_ptr<std::array<KLMNSeriesPoly, 6>>> forms;
  std::map<std::pair<int, int>, std::unique_ptr<std::array<Invariant, 6>>> invariants;
};

FrameOrderCache& frame_cache() {
  static FrameOrderCache cache;
  return cache;
}

Invariant klmn_to_invariant(const KLMNSeriesPoly& p, int weight, int degree, int order) {
  const KLMN& b = klmn(order);
  PowerCache<ISeriesPoly> cache({b.K.poly(), b.L.poly(), b.M.poly(), b.N.poly()},
                                ISeriesPoly::constant(FracSeries::constant(1)));
  ISeriesPoly out =
      substitute(p, cache, [](const FracSeries& c) { return ISeriesPoly::constant(c); });
  return Invariant(std::move(out), weight, degree);
}

template <class Vars>
Invariant evaluate_frame(const Poly<Vars>& p, Frame frame, int order, std::size_t unit0,
                         std::size_t unit1, const FracSeries& inv0, const FracSeries& inv1) {
  auto wd = weight_degree(p);
  if (!wd) throw NotHomogeneous("curve polynomial is not homogeneous in weight and degree");
  const auto& images = curve_invariants(frame, order);
  std::vector<ISeriesPoly> bases;
  for (const auto& x : images) bases.push_back(x.poly());
  std::vector<std::optional<ISeriesPoly>> inverses(6);
  inverses[unit0] = ISeriesPoly::constant(inv0);
  inverses[unit1] = ISeriesPoly::constant(inv1);
  PowerCache<ISeriesPoly> cache(std::move(bases), ISeriesPoly::constant(FracSeries::constant(1)),
                                std::move(inverses));
  ISeriesPoly out = substitute(p, cache, [](const Rational& c) {
    return ISeriesPoly::constant(FracSeries::constant(c));
  });
  return Invariant(std::move(out), wd->first, wd->second);
}

}  // namespace

std::optional<CurveGrading> grading_of(const CurvePolyAB& p) {
  auto wd = weight_degree(p);
  auto da = p.homogeneous_degree(ABVars::a_count);
  auto db = p.homogeneous_degree(ABVars::b_count);
  if (!wd) return std::nullopt;
  if (p.is_zero()) return CurveGrading{};
  if (!da || !db) return std::nullopt;
  return CurveGrading{wd->first, wd->second, *da, *db};
}

std::optional<std::pair<int, int>> grading_of(const CurvePolyCD& p) { return weight_degree(p); }

CurvePolyCD ab_to_cd(const CurvePolyAB& p) {
  static const std::array<CurvePolyCD, 6> images = ab_images();
  std::vector<std::optional<CurvePolyCD>> inverses(6);
  inverses[kA0] = CurvePolyCD::variable(kC0, -1);
  inverses[kB0] = CurvePolyCD::variable(kD0, -1);
  PowerCache<CurvePolyCD> cache(to_vector(images), CurvePolyCD::constant(1), std::move(inverses));
  return substitute(p, cache, [](const Rational& c) { return CurvePolyCD::constant(c); });
}

CurvePolyAB cd_to_ab(const CurvePolyCD& p) {
  static const std::array<CurvePolyAB, 6> images = cd_images();
  std::vector<std::optional<CurvePolyAB>> inverses(6);
  inverses[kC0] = CurvePolyAB::variable(kA0, -1);
  inverses[kD0] = CurvePolyAB::variable(kB0, -1);
  PowerCache<CurvePolyAB> cache(to_vector(images), CurvePolyAB::constant(1), std::move(inverses));
  return substitute(p, cache, [](const Rational& c) { return CurvePolyAB::constant(c); });
}

bool is_triality_invariant(const CurvePolyAB& p) {
  return ab_to_cd(p).min_exponent(kC0) >= 0;
}

const std::array<KLMNSeriesPoly, 6>& curve_klmn_forms(Frame frame, int order) {
  auto& cache = frame_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.forms[{static_cast<int>(frame), order}];
  if (!slot) slot = std::make_unique<std::array<KLMNSeriesPoly, 6>>(make_forms(frame, order));
  return *slot;
}

const std::array<Invariant, 6>& curve_invariants(Frame frame, int order) {
  const auto& forms = curve_klmn_forms(frame, order);
  klmn(order);
  auto& cache = frame_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.invariants[{static_cast<int>(frame), order}];
  if (!slot) {
    const auto& w = frame == Frame::ab ? ABVars::weights : CDVars::weights;
    const auto& d = frame == Frame::ab ? ABVars::degrees : CDVars::degrees;
    auto out = std::make_unique<std::array<Invariant, 6>>();
    for (std::size_t i = 0; i < 6; ++i) (*out)[i] = klmn_to_invariant(forms[i], w[i], d[i], order);
    slot = std::move(out);
  }
  return *slot;
}

Invariant evaluate_ab(const CurvePolyAB& p, int order) {
  const ModularSeries& ms = modular_series(order);
  return evaluate_frame(p, Frame::ab, order, kA0, kB0, ms.inv_E4 * Rational(12),
                        ms.inv_E6 * Rational(216));
}

Invariant evaluate_cd(const CurvePolyCD& p, int order) {
  const ModularSeries& ms = modular_series(order);
  return evaluate_frame(p, Frame::cd, order, kC0, kD0, ms.inv_E4 * Rational(12),
                        ms.inv_E6 * Rational(216));
}

const Recovery& recover_klmn() {
  static const Recovery r = [] {
    using A = CurvePolyAB;
    using C = CurvePolyCD;
    Recovery out;
    // exponents over (a0, a2, b0, b1, b2, b3)
    out.ab[0] = build<A>({{12, {1, 0, 0, 1, 0, 0}}});
    out.ab[1] = build<A>({{-2, {4, 0, 0, 0, 1, 0}},
                          {3, {3, 1, 1, 0, 0, 0}},
                          {54, {1, 0, 2, 0, 1, 0}},
                          {-27, {1, 0, 1, 2, 0, 0}},
                          {-81, {0, 1, 3, 0, 0, 0}}});
    out.ab[2] = build<A>({{2, {5, 1, 0, 0, 0, 0}},
                          {-36, {3, 0, 1, 0, 1, 0}},
                          {-6, {3, 0, 0, 2, 0, 0}},
                          {-54, {2, 1, 2, 0, 0, 0}},
                          {972, {0, 0, 3, 0, 1, 0}},
                          {-324, {0, 0, 2, 2, 0, 0}}});
    out.ab[3] = build<A>({{4, {6, 0, 0, 0, 0, 1}},
                          {-2, {5, 1, 0, 1, 0, 0}},
                          {-216, {3, 0, 2, 0, 0, 1}},
                          {36, {3, 0, 1, 1, 1, 0}},
                          {10, {3, 0, 0, 3, 0, 0}},
                          {54, {2, 1, 2, 1, 0, 0}},
                          {2916, {0, 0, 4, 0, 0, 1}},
                          {-972, {0, 0, 3, 1, 1, 0}},
                          {216, {0, 0, 2, 3, 0, 0}}});
    // exponents over (c0, c1, c2, d0, d2, d3)
    out.cd[0] = build<C>({{-18, {0, 1, 0, 1, 0, 0}}});
    out.cd[1] = build<C>({{-2, {4, 0, 0, 0, 1, 0}},
                          {3, {3, 0, 1, 1, 0, 0}},
                          {Rational(-9, 4), {2, 2, 0, 1, 0, 0}},
                          {54, {1, 0, 0, 2, 1, 0}},
                          {-81, {0, 0, 1, 3, 0, 0}}});
    out.cd[2] = build<C>({{2, {5, 0, 1, 0, 0, 0}},
                          {Rational(-1, 2), {4, 2, 0, 0, 0, 0}},
                          {-36, {3, 0, 0, 1, 1, 0}},
                          {-54, {2, 0, 1, 2, 0, 0}},
                          {-27, {1, 2, 0, 2, 0, 0}},
                          {972, {0, 0, 0, 3, 1, 0}}});
    out.cd[3] = build<C>({{4, {6, 0, 0, 0, 0, 1}},
                          {-2, {5, 1, 0, 0, 1, 0}},
                          {3, {4, 1, 1, 1, 0, 0}},
                          {Rational(-5, 4), {3, 3, 0, 1, 0, 0}},
                          {-216, {3, 0, 0, 2, 0, 1}},
                          {54, {2, 1, 0, 2, 1, 0}},
                          {-81, {1, 1, 1, 3, 0, 0}},
                          {-27, {0, 3, 0, 3, 0, 0}},
                          {2916, {0, 0, 0, 4, 0, 1}}});
    return out;
  }();
  return r;
}

KLMNSeriesPoly jacobian_klmn_poly(Frame frame, int order) {
  const auto& f = curve_klmn_forms(frame, order);
  // rows: (a2, b1, b2, b3) or (c1, c2, d2, d3)
  std::array<std::size_t, 4> rows =
      frame == Frame::ab ? std::array<std::size_t, 4>{kA2, kB1, kB2, kB3}
                         : std::array<std::size_t, 4>{kC1, kC2, kD2, kD3};
  std::array<std::array<KLMNSeriesPoly, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = f[rows[i]].derivative(j);
  }
  return determinant(m);
}

std::pair<FracSeries, FracSeries> jacobian_klmn(int order) {
  auto constant_of = [order](Frame frame) {
    KLMNSeriesPoly j = jacobian_klmn_poly(frame, order);
    FracSeries c = j.coefficient({0, 0, 0, 0});
    j -= KLMNSeriesPoly::constant(c);
    if (!(j == KLMNSeriesPoly())) throw std::logic_error("curve Jacobian depends on K, L, M, N");
    return c;
  };
  return {constant_of(Frame::ab), constant_of(Frame::cd)};
}

}  // namespace triality
