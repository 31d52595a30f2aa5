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

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace triality {

/// Leibniz expansion of an N x N determinant over any commutative ring R
/// with R{} as zero, unary minus, + and *. Fine for the 4 x 4 Jacobians used
/// here (24 terms).
template <class R, std::size_t N>
R determinant(const std::array<std::array<R, N>, N>& m) {
  std::array<std::size_t, N> perm;
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  R total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = i + 1; j < N; ++j) inversions += perm[i] > perm[j];
    }
    R term = m[0][perm[0]];
    for (std::size_t i = 1; i < N; ++i) term = term * m[i][perm[i]];
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace triality
