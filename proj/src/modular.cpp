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

#include "triality/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace triality {
namespace {

void require_order(int order, int minimum, const char* what) {
  if (order < minimum) {
    throw std::invalid_argument(std::string(what) + ": order must be >= " + std::to_string(minimum));
  }
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int n = 1; n <= k; ++n) {
    Rational sum = 0;
    for (int j = 0; j < n; ++j) sum += Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(n)] = -sum / Rational(n + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

FracSeries eisenstein(int two_n, int order) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("eisenstein: weight must be even and >= 2");
  require_order(order, 1, "eisenstein");
  const int n = two_n / 2;
  const Rational factor = -Rational(4 * n) / bernoulli(two_n);
  // sum_k k^(2n-1) q^k/(1-q^k) = sum_k k^(2n-1) sum_{j>=1} q^(jk).
  std::vector<BigInt> sigma(static_cast<std::size_t>(order), 0);
  for (int k = 1; k < order; ++k) {
    BigInt kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(two_n - 1));
    for (int e = k; e < order; e += k) sigma[static_cast<std::size_t>(e)] += kp;
  }
  std::vector<std::pair<int, Rational>> terms{{0, Rational(1)}};
  for (int e = 1; e < order; ++e) {
    terms.emplace_back(q_order_to_trunc(e), factor * Rational(sigma[static_cast<std::size_t>(e)]));
  }
  return FracSeries::from_terms(std::move(terms), q_order_to_trunc(order));
}

FracSeries theta_const(int k, int order) {
  require_order(order, 1, "theta_const");
  const int trunc = q_order_to_trunc(order);
  std::vector<std::pair<int, Rational>> terms;
  switch (k) {
    case 1:
      return FracSeries();
    case 2:
      // q^((n-1/2)^2/2) = t^(3 (2n-1)^2); n and 1-n give the same odd m = |2n-1|.
      for (int m = 1; 3 * m * m < trunc; m += 2) terms.emplace_back(3 * m * m, Rational(2));
      break;
    case 3:
    case 4:
      // q^(n^2/2) = t^(12 n^2).
      terms.emplace_back(0, Rational(1));
      for (int n = 1; 12 * n * n < trunc; ++n) {
        int sign = (k == 4 && n % 2 == 1) ? -1 : 1;
        terms.emplace_back(12 * n * n, Rational(2 * sign));
      }
      break;
    default:
      throw std::invalid_argument("theta_const: k must be 1, 2, 3 or 4");
  }
  return FracSeries::from_terms(std::move(terms), trunc);
}

std::pair<FracSeries, FracSeries> eta_delta(int order) {
  require_order(order, 2, "eta_delta");
  const int trunc = q_order_to_trunc(order);
  // prod_{n>=1} (1 - q^n); factors with n >= order do not touch the window.
  FracSeries product = FracSeries::constant(1).truncated(trunc);
  for (int n = 1; n < order; ++n) {
    product *= FracSeries::from_terms({{0, Rational(1)}, {q_order_to_trunc(n), Rational(-1)}},
                                      FracSeries::kExact);
  }
  FracSeries eta = product.shifted(1).truncated(trunc);
  FracSeries delta = product.pow(24).shifted(24).truncated(trunc);
  return {eta, delta};
}

FracSeries e_series(int i, int order) {
  require_order(order, 1, "e_series");
  const int trunc = q_order_to_trunc(order);
  FracSeries t2 = theta_const(2, order).pow(4).truncated(trunc);
  FracSeries t3 = theta_const(3, order).pow(4).truncated(trunc);
  FracSeries t4 = theta_const(4, order).pow(4).truncated(trunc);
  const Rational twelfth(1, 12);
  switch (i) {
    case 1: return (t3 + t4) * twelfth;
    case 2: return (t2 - t4) * twelfth;
    case 3: return (-t2 - t3) * twelfth;
    default: throw std::invalid_argument("e_series: i must be 1, 2 or 3");
  }
}

const ModularSeries& modular_series(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ModularSeries>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    auto m = std::make_unique<ModularSeries>();
    const int trunc = q_order_to_trunc(order);
    m->order = order;
    m->E4 = eisenstein(4, order);
    m->E6 = eisenstein(6, order);
    std::tie(m->eta, m->delta) = eta_delta(order);
    m->theta2_4 = theta_const(2, order).pow(4).truncated(trunc);
    m->theta3_4 = theta_const(3, order).pow(4).truncated(trunc);
    m->theta4_4 = theta_const(4, order).pow(4).truncated(trunc);
    const Rational twelfth(1, 12);
    m->e1 = (m->theta3_4 + m->theta4_4) * twelfth;
    m->e2 = (m->theta2_4 - m->theta4_4) * twelfth;
    m->e3 = (-m->theta2_4 - m->theta3_4) * twelfth;
    m->inv_E4 = invert(m->E4);
    m->inv_E6 = invert(m->E6);
    m->inv_delta = invert(m->delta);
    slot = std::move(m);
  }
  return *slot;
}

}  // namespace triality
