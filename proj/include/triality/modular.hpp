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

#include <utility>

#include "triality/frac_series.hpp"

namespace triality {

/// Bernoulli number B_k with B_1 = -1/2, i.e. the coefficients of
/// x/(e^x - 1) = sum B_k x^k / k!.
Rational bernoulli(int k);

/// E_{2n} = 1 - (4n/B_{2n}) sum_k k^(2n-1) q^k/(1-q^k), truncated at q^order.
FracSeries eisenstein(int two_n, int order);

/// theta_k(0, tau) for k = 2, 3, 4 from the defining lattice sums,
/// truncated at q^order. theta_1(0, tau) vanishes identically and is
/// returned as the exact zero for k = 1.
FracSeries theta_const(int k, int order);

/// (eta, Delta = eta^24), both truncated at q^order.
std::pair<FracSeries, FracSeries> eta_delta(int order);

/// e_1 = (th3^4 + th4^4)/12, e_2 = (th2^4 - th4^4)/12,
/// e_3 = (-th2^4 - th3^4)/12.
FracSeries e_series(int i, int order);

/// All modular building blocks at one truncation order, computed once.
struct ModularSeries {
  int order = 0;
  FracSeries E4, E6, delta, eta;
  FracSeries theta2_4, theta3_4, theta4_4;
  FracSeries e1, e2, e3;
  FracSeries inv_E4, inv_E6, inv_delta;
};

/// Cached, thread-safe access to the building blocks at a given order.
const ModularSeries& modular_series(int order);

}  // namespace triality
