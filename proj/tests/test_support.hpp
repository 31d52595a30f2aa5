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

#include <random>
#include <vector>

#include "triality/frac_series.hpp"
#include "triality/poly.hpp"

namespace triality::testing {

/// Fixed-seed generator shared by the property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20260611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational() {
  int num = uniform(-9, 9);
  int den = uniform(1, 5);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Series with a few terms on the given exponent step, starting at `lo`.
inline FracSeries random_series(int lo, int trunc, int step = 12, int max_terms = 6) {
  std::vector<std::pair<int, Rational>> terms;
  int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    int e = lo + step * uniform(0, (trunc - lo) / step);
    if (e < trunc) terms.emplace_back(e, small_rational());
  }
  return FracSeries::from_terms(std::move(terms), trunc);
}

/// Series with a nonzero leading term at exponent lo.
inline FracSeries random_unit_series(int lo, int trunc, int step = 12) {
  FracSeries s = random_series(lo + step, trunc, step);
  int c = uniform(1, 4) * (uniform(0, 1) ? 1 : -1);
  return s + FracSeries::monomial(lo, c).truncated(trunc);
}

template <class Vars>
Poly<Vars> random_poly(int max_terms, int max_exp) {
  Poly<Vars> p;
  int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    typename Poly<Vars>::Exps e{};
    for (auto& x : e) x = uniform(0, max_exp);
    p.add_term(e, small_rational());
  }
  return p;
}

}  // namespace triality::testing
