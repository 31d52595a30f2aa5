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

#include "triality/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <thread>

namespace triality {

namespace {

void enumerate(int var, int k, int m, CurvePolyAB::Exps& e, std::vector<CurvePolyAB::Exps>& out) {
  if (var == static_cast<int>(ABVars::size)) {
    if (k == 0 && m == 0) out.push_back(e);
    return;
  }
  const int w = ABVars::weights[var];
  const int d = ABVars::degrees[var];
  for (int p = 0; p * w <= k && p * d <= m; ++p) {
    e[var] = p;
    enumerate(var + 1, k - p * w, m - p * d, e, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<CurvePolyAB::Exps> monomials_of(int k, int m) {
  std::vector<CurvePolyAB::Exps> out;
  if (k < 0 || m < 0) return out;
  CurvePolyAB::Exps e{};
  enumerate(0, k, m, e, out);
  std::sort(out.begin(), out.end(), GradedLexGreater<ABVars::size>());
  return out;
}

AnsatzBasis triality_basis(int k, int m) {
  AnsatzBasis out;
  out.weight = k;
  out.degree = m;
  out.monomials = monomials_of(k, m);
  const std::size_t n = out.monomials.size();
  if (n == 0) return out;

  std::vector<CurvePolyCD> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = ab_to_cd(CurvePolyAB::monomial(out.monomials[j], 1));

  std::map<CurvePolyCD::Exps, std::size_t, GradedLexGreater<CDVars::size>> rows;
  for (const auto& img : images) {
    for (const auto& [e, c] : img.terms()) {
      if (e[kC0] < 0) rows.emplace(e, rows.size());
    }
  }
  RationalMatrix mat(rows.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [e, c] : images[j].terms()) {
      if (e[kC0] < 0) mat(rows.at(e), j) = c;
    }
  }
  for (const auto& v : rational_kernel(mat)) {
    CurvePolyAB p;
    for (std::size_t j = 0; j < n; ++j) p.add_term(out.monomials[j], v[j]);
    out.basis.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> dimension_table(int k_max, int m_max) {
  std::vector<std::vector<int>> table(k_max + 1, std::vector<int>(m_max + 1, 0));
  std::vector<std::pair<int, int>> cells;
  for (int k = 0; k <= k_max; k += 2) {
    for (int m = 0; m <= m_max; m += 2) cells.emplace_back(k, m);
  }
  // Largest cells first so the pool drains evenly.
  std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a.first + a.second > b.first + b.second; });
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        auto [k, m] = cells[i];
        table[k][m] = static_cast<int>(triality_basis(k, m).basis.size());
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return table;
}

std::vector<int> rank_series(int m_max) {
  if (m_max < 0) return {};
  std::vector<int> r(m_max + 1, 0);
  r[0] = 1;
  for (int part : {2, 4, 4, 6}) {
    for (int m = part; m <= m_max; ++m) r[m] += r[m - part];
  }
  return r;
}

std::vector<int> free_generator_counts(const std::vector<int>& column) {
  auto at = [&](int k) { return k < 0 ? 0 : column[k]; };
  std::vector<int> g(column.size());
  for (int k = 0; k < static_cast<int>(column.size()); ++k) {
    g[k] = at(k) - at(k - 4) - at(k - 6) + at(k - 10);
  }
  return g;
}

}  // namespace triality
