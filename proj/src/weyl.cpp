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

#include "triality/weyl.hpp"

#include <map>

#include "triality/determinant.hpp"
#include "triality/errors.hpp"
#include "triality/linalg.hpp"

namespace triality {
namespace {

ZPoly z_square(std::size_t i) { return ZPoly::variable(i, 2); }

}  // namespace

const WeylGenerators& weyl_generators() {
  static const WeylGenerators gens = [] {
    WeylGenerators g;
    for (std::size_t i = 0; i < 4; ++i) {
      g.I2 += z_square(i);
      for (std::size_t j = i + 1; j < 4; ++j) {
        g.I4 += z_square(i) * z_square(j);
        for (std::size_t k = j + 1; k < 4; ++k) g.I6 += z_square(i) * z_square(j) * z_square(k);
      }
    }
    g.It4 = ZPoly::monomial({1, 1, 1, 1}, 1);
    return g;
  }();
  return gens;
}

int ipoly_monomial_degree(const IPoly::Exps& e) {
  int d = 0;
  for (std::size_t i = 0; i < 4; ++i) d += IVars::degrees[i] * e[i];
  return d;
}

std::optional<int> ipoly_degree(const IPoly& p) { return p.homogeneous_degree(IVars::degrees); }

std::vector<IPoly::Exps> imonomials_of_degree(int m) {
  std::vector<IPoly::Exps> out;
  if (m < 0 || m % 2 != 0) return out;
  for (int c = 0; 6 * c <= m; ++c) {
    for (int b = 0; 6 * c + 4 * b <= m; ++b) {
      for (int d = 0; 6 * c + 4 * b + 4 * d <= m; ++d) {
        int rest = m - 6 * c - 4 * b - 4 * d;
        out.push_back({rest / 2, b, c, d});
      }
    }
  }
  std::sort(out.begin(), out.end(), GradedLexGreater<4>{});
  return out;
}

ZPoly ipoly_to_zpoly(const IPoly& p) {
  const auto& g = weyl_generators();
  PowerCache<ZPoly> cache({g.I2, g.I4, g.I6, g.It4}, ZPoly::constant(1));
  return substitute(p, cache, [](const Rational& c) { return ZPoly::constant(c); });
}

IPoly zpoly_to_ipoly(const ZPoly& p) {
  if (p.is_zero()) return IPoly();
  auto deg = p.homogeneous_degree({1, 1, 1, 1});
  if (!deg) throw NotHomogeneous("zpoly_to_ipoly: input is not homogeneous");
  auto monos = imonomials_of_degree(*deg);
  if (monos.empty()) throw NotInvariant("zpoly_to_ipoly: no W(D4) invariants of degree " + std::to_string(*deg));

  std::vector<ZPoly> images;
  std::map<ZPoly::Exps, std::size_t, GradedLexGreater<4>> rows;
  for (const auto& e : monos) {
    images.push_back(ipoly_to_zpoly(IPoly::monomial(e, 1)));
    for (const auto& [ze, c] : images.back().terms()) rows.try_emplace(ze, 0);
  }
  for (const auto& [ze, c] : p.terms()) rows.try_emplace(ze, 0);
  std::size_t idx = 0;
  for (auto& [ze, r] : rows) r = idx++;

  RationalMatrix m(rows.size(), monos.size());
  std::vector<Rational> rhs(rows.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    for (const auto& [ze, c] : images[j].terms()) m(rows.at(ze), j) = c;
  }
  for (const auto& [ze, c] : p.terms()) rhs[rows.at(ze)] = c;

  auto x = solve(m, rhs);
  if (!x) throw NotInvariant("zpoly_to_ipoly: polynomial is not W(D4)-invariant");
  IPoly out;
  for (std::size_t j = 0; j < monos.size(); ++j) out.add_term(monos[j], (*x)[j]);
  return out;
}

ZPoly jacobian_z(const ZPoly& f1, const ZPoly& f2, const ZPoly& f3, const ZPoly& f4) {
  std::array<const ZPoly*, 4> fs{&f1, &f2, &f3, &f4};
  std::array<std::array<ZPoly, 4>, 4> m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = fs[i]->derivative(j);
  }
  return determinant(m);
}

ZPoly vandermonde_squares() {
  ZPoly out = ZPoly::constant(1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) out *= z_square(i) - z_square(j);
  }
  return out;
}

Rational evaluate(const ZPoly& p, const std::array<Rational, 4>& z) {
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < 4; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= z[i];
    }
    total += term;
  }
  return total;
}

}  // namespace triality
