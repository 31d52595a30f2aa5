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

#include "triality/covariants.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "triality/errors.hpp"
#include "triality/linalg.hpp"

namespace triality {

namespace {

struct KappaVars {
  static constexpr std::size_t size = 8;
  static constexpr std::array<std::string_view, 8> names{"alpha0", "alpha1", "alpha2", "beta0",
                                                         "beta1",  "beta2",  "beta3",  "kappa"};
};
using KappaPoly = Poly<KappaVars>;
constexpr std::size_t kKappa = 7;

void require_no_uv(const FormPoly& p, const char* what) {
  if (p.max_exponent(kU) > 0 || p.max_exponent(kV) > 0 || p.min_exponent(kU) < 0 ||
      p.min_exponent(kV) < 0) {
    throw std::invalid_argument(std::string(what) + ": polynomial involves u or v");
  }
}

// Coefficients of f(u + kappa v, v) and g(u + kappa v, v).
const std::vector<KappaPoly>& primed_coefficients() {
  static const std::vector<KappaPoly> images = [] {
    std::vector<KappaPoly> out(7);
    KappaPoly kappa = KappaPoly::variable(kKappa);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j <= i; ++j) {
        out[kAl0 + i] += KappaPoly::variable(kAl0 + j) * kappa.pow(i - j) * Rational(binomial(2 - j, i - j));
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j <= i; ++j) {
        out[kBe0 + i] += KappaPoly::variable(kBe0 + j) * kappa.pow(i - j) * Rational(binomial(3 - j, i - j));
      }
    }
    out.push_back(kappa);
    return out;
  }();
  return images;
}

KappaPoly to_kappa(const FormPoly& p) {
  KappaPoly out;
  for (const auto& [e, c] : p.terms()) {
    KappaPoly::Exps k{};
    for (std::size_t i = 0; i < 7; ++i) k[i] = e[i];
    out.add_term(k, c);
  }
  return out;
}

// P(alpha', beta') - P(alpha, beta).
KappaPoly unipotent_defect(const FormPoly& p, PowerCache<KappaPoly>& cache) {
  KappaPoly q = to_kappa(p);
  return substitute(q, cache, [](const Rational& c) { return KappaPoly::constant(c); }) - q;
}

PowerCache<KappaPoly> kappa_cache() { return PowerCache<KappaPoly>(primed_coefficients(), KappaPoly::constant(1)); }

void enumerate_coefficient_monomials(std::size_t var, int da, int db, FormPoly::Exps& e,
                                     std::vector<FormPoly::Exps>& out) {
  if (var == 7) {
    if (da == 0 && db == 0) out.push_back(e);
    return;
  }
  int& budget = var < 3 ? da : db;
  const int saved = budget;
  for (int p = 0; p <= saved; ++p) {
    e[var] = p;
    budget = saved - p;
    enumerate_coefficient_monomials(var + 1, da, db, e, out);
  }
  budget = saved;
  e[var] = 0;
}


}  // namespace

FormPoly form_f() {
  FormPoly f;
  for (int i = 0; i < 3; ++i) {
    FormPoly::Exps e{};
    e[kAl0 + i] = 1;
    e[kU] = 2 - i;
    e[kV] = i;
    f.add_term(e, 1);
  }
  return f;
}

FormPoly form_g() {
  FormPoly g;
  for (int i = 0; i < 4; ++i) {
    FormPoly::Exps e{};
    e[kBe0 + i] = 1;
    e[kU] = 3 - i;
    e[kV] = i;
    g.add_term(e, 1);
  }
  return g;
}

int uv_order(const FormPoly& p) {
  if (p.is_zero()) return 0;
  auto d = p.homogeneous_degree(FormVars::uv_count);
  if (!d) throw NotHomogeneous("form is not homogeneous in (u, v)");
  return *d;
}

FormPoly transvectant(const FormPoly& f1, const FormPoly& f2, int i, int n1, int n2) {
  if (i < 0 || i > n1 || i > n2) {
    throw BadOrder("transvectant index " + std::to_string(i) + " exceeds form orders " +
                   std::to_string(n1) + ", " + std::to_string(n2));
  }
  if ((!f1.is_zero() && uv_order(f1) != n1) || (!f2.is_zero() && uv_order(f2) != n2)) {
    throw BadOrder("form order does not match the stated order");
  }
  auto partial = [](const FormPoly& p, int du, int dv) {
    FormPoly out = p;
    for (int k = 0; k < du; ++k) out = out.derivative(kU);
    for (int k = 0; k < dv; ++k) out = out.derivative(kV);
    return out;
  };
  FormPoly sum;
  for (int j = 0; j <= i; ++j) {
    FormPoly term = partial(f1, i - j, j) * partial(f2, j, i - j) * Rational(binomial(i, j));
    if (j % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  Rational pre(factorial(n1 - i) * factorial(n2 - i), factorial(n1) * factorial(n2));
  pre.canonicalize();
  return sum * pre;
}

FormPoly transvectant(const FormPoly& f1, const FormPoly& f2, int i) {
  return transvectant(f1, f2, i, uv_order(f1), uv_order(f2));
}

bool is_semiinvariant(const FormPoly& p) {
  require_no_uv(p, "is_semiinvariant");
  auto cache = kappa_cache();
  return unipotent_defect(p, cache).is_zero();
}

int order_of(const FormPoly& p) {
  if (p.is_zero()) return 0;
  if (p.max_exponent(kU) > 0 || p.max_exponent(kV) > 0) return uv_order(p);
  auto w = p.homogeneous_degree(FormVars::scaling);
  if (!w) throw NotHomogeneous("semiinvariant is not homogeneous under scaling");
  return *w;
}

FormPoly roberts_to_covariant(const FormPoly& phi) {
  require_no_uv(phi, "roberts_to_covariant");
  const int omega = order_of(phi);
  if (omega < 0) throw NegativeOrder("semiinvariant has order " + std::to_string(omega));
  // t = v/u
  FormPoly t = FormPoly::monomial({0, 0, 0, 0, 0, 0, 0, -1, 1}, 1);
  std::vector<FormPoly> images(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) images[kAl0 + i] += FormPoly::variable(kAl0 + j) * t.pow(j - i) * Rational(binomial(j, i));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) images[kBe0 + i] += FormPoly::variable(kBe0 + j) * t.pow(j - i) * Rational(binomial(j, i));
  }
  images[kU] = FormPoly::variable(kU);
  images[kV] = FormPoly::variable(kV);
  PowerCache<FormPoly> cache(std::move(images), FormPoly::constant(1));
  FormPoly out = substitute(phi, cache, [](const Rational& c) { return FormPoly::constant(c); }) *
                 FormPoly::variable(kU, omega);
  if (!out.is_polynomial()) throw NotPolynomial("negative powers of u survive; input is not a semiinvariant");
  return out;
}

FormPoly roberts_to_semiinvariant(const FormPoly& psi) {
  FormPoly out;
  for (const auto& [e, c] : psi.terms()) {
    if (e[kV] != 0) continue;
    FormPoly::Exps s = e;
    s[kU] = 0;
    out.add_term(s, c);
  }
  return out;
}

const HatCoefficients& hat_coefficients() {
  static const HatCoefficients h = [] {
    HatCoefficients out;
    FormPoly shift_a = FormPoly::monomial({-1, 1, 0, 0, 0, 0, 0, 0, 0}, Rational(-1, 2));
    FormPoly shift_c = FormPoly::monomial({0, 0, 0, -1, 1, 0, 0, 0, 0}, Rational(-1, 3));
    auto alpha = [](int j) { return FormPoly::variable(kAl0 + j); };
    auto beta = [](int j) { return FormPoly::variable(kBe0 + j); };
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j <= i; ++j) {
        Rational c(binomial(2 - j, 2 - i));
        out.a[i] += alpha(j) * shift_a.pow(i - j) * c;
        out.c[i] += alpha(j) * shift_c.pow(i - j) * c;
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j <= i; ++j) {
        Rational c(binomial(3 - j, 3 - i));
        out.b[i] += beta(j) * shift_a.pow(i - j) * c;
        out.d[i] += beta(j) * shift_c.pow(i - j) * c;
      }
    }
    return out;
  }();
  return h;
}

FormPoly psi_forward(const CurvePolyAB& p) {
  const HatCoefficients& h = hat_coefficients();
  std::vector<std::optional<FormPoly>> inverses(6);
  inverses[kA0] = FormPoly::variable(kAl0, -1);
  inverses[kB0] = FormPoly::variable(kBe0, -1);
  PowerCache<FormPoly> cache({h.a[0], h.a[2], h.b[0], h.b[1], h.b[2], h.b[3]}, FormPoly::constant(1),
                             std::move(inverses));
  FormPoly out = substitute(p, cache, [](const Rational& c) { return FormPoly::constant(c); });
  if (!out.is_polynomial()) throw NotPolynomial("alpha0 denominators survive; input is not a triality invariant");
  return out;
}

CurvePolyAB psi_inverse(const FormPoly& p) {
  require_no_uv(p, "psi_inverse");
  CurvePolyAB out;
  for (const auto& [e, c] : p.terms()) {
    if (e[kAl1] != 0) continue;
    out.add_term({e[kAl0], e[kAl2], e[kBe0], e[kBe1], e[kBe2], e[kBe3]}, c);
  }
  return out;
}

const std::vector<Generator>& gordan_generators() {
  static const std::vector<Generator> gens = [] {
    const FormPoly f = form_f();
    const FormPoly g = form_g();
    const FormPoly P = transvectant(g, g, 2);
    const FormPoly Q = transvectant(g, P, 1);
    auto make = [](std::string_view expr, FormPoly cov, int da, int db, int m) {
      return Generator{std::string(expr), std::move(cov), da, db, m, 2 * da + 3 * db - m};
    };
    std::vector<Generator> out;
    out.push_back(make("f", f, 1, 0, 0));
    out.push_back(make("g", g, 0, 1, 0));
    out.push_back(make("<f,g>1", transvectant(f, g, 1), 1, 1, 2));
    out.push_back(make("<f,f>2", transvectant(f, f, 2), 2, 0, 4));
    out.push_back(make("<f,g>2", transvectant(f, g, 2), 1, 1, 4));
    out.push_back(make("P=<g,g>2", P, 0, 2, 4));
    out.push_back(make("<f^2,g>3", transvectant(f * f, g, 3), 2, 1, 6));
    out.push_back(make("<f,P>1", transvectant(f, P, 1), 1, 2, 6));
    out.push_back(make("Q=<g,P>1", Q, 0, 3, 6));
    out.push_back(make("<f,P>2", transvectant(f, P, 2), 1, 2, 8));
    out.push_back(make("<f,Q>2", transvectant(f, Q, 2), 1, 3, 10));
    out.push_back(make("<f^3,g^2>6", transvectant(f.pow(3), g * g, 6), 3, 2, 12));
    out.push_back(make("<P,P>2", transvectant(P, P, 2), 0, 4, 12));
    out.push_back(make("<f^2,Q>3", transvectant(f * f, Q, 3), 2, 3, 12));
    out.push_back(make("<f^3,gQ>6", transvectant(f.pow(3), g * Q, 6), 3, 4, 18));
    return out;
  }();
  return gens;
}

std::vector<FormPoly> semiinvariant_basis(int d_alpha, int d_beta, int omega) {
  std::vector<FormPoly> out;
  if (d_alpha < 0 || d_beta < 0) return out;
  std::vector<FormPoly::Exps> all;
  FormPoly::Exps e{};
  enumerate_coefficient_monomials(0, d_alpha, d_beta, e, all);
  std::vector<FormPoly::Exps> monos;
  for (const auto& m : all) {
    int w = 0;
    for (std::size_t i = 0; i < 7; ++i) w += FormVars::scaling[i] * m[i];
    if (w == omega) monos.push_back(m);
  }
  std::sort(monos.begin(), monos.end(), GradedLexGreater<FormVars::size>());
  if (monos.empty()) return out;
  auto cache = kappa_cache();
  std::vector<KappaPoly> defects;
  std::map<KappaPoly::Exps, std::size_t> rows;
  for (const auto& m : monos) {
    defects.push_back(unipotent_defect(FormPoly::monomial(m, 1), cache));
    for (const auto& [k, c] : defects.back().terms()) rows.emplace(k, 0);
  }
  std::size_t r = 0;
  for (auto& [k, idx] : rows) idx = r++;
  RationalMatrix mat(rows.size(), monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    for (const auto& [k, c] : defects[j].terms()) mat(rows.at(k), j) = c;
  }
  for (const auto& v : rational_kernel(mat)) {
    FormPoly p;
    for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], v[j]);
    out.push_back(std::move(p));
  }
  return out;
}

int semiinvariant_dimension(int d_alpha, int d_beta, int omega) {
  if (omega < 0) return 0;
  return static_cast<int>(semiinvariant_basis(d_alpha, d_beta, omega).size());
}

}  // namespace triality
