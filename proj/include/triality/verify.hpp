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

#include <string>
#include <string_view>
#include <vector>

#include "triality/frac_series.hpp"
#include "triality/invariant.hpp"

namespace triality {

struct Check {
  int criterion = 0;  // acceptance criterion number, 1..10
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int order = 24;
  /// Largest weight used for the free-module rank test.
  int rank_kmax = 60;
};

/// series, jacobians, curve, isomorphism, table1, all.
const std::vector<std::string>& suite_names();

/// Runs a suite. Throws UnknownSuite for an unknown name.
std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& opts = {});

/// a == b on [.., trunc) and both are known that far.
bool agrees_to(const FracSeries& a, const FracSeries& b, int trunc);
bool agrees_to(const Invariant& a, const Invariant& b, int trunc);

/// Result of the free-module rank test for one degree.
struct RankColumn {
  int m = 0;
  int expected_rank = 0;
  std::vector<int> generator_weights;  // with multiplicity
  bool nonnegative = true;
  int total = 0;
  int stabilization_weight = -1;
};
std::vector<RankColumn> rank_columns(int k_max, int m_max);

}  // namespace triality
