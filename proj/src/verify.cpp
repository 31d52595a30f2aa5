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

#include "triality/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "triality/covariants.hpp"
#include "triality/enumerator.hpp"
#include "triality/errors.hpp"
#include "triality/modular.hpp"
#include "triality/sw_curve.hpp"
#include "triality/weyl.hpp"

namespace triality {

namespace {

using Checks = std::vector<Check>;

void add(Checks& out, int criterion, std::string name, bool pass, std::string detail = {}) {
  out.push_back(Check{criterion, std::move(name), pass, std::move(detail)});
}

// Runs body, turning a library exception into a failed check.
void guarded(Checks& out, int criterion, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    add(out, criterion, name, false, std::string("exception: ") + e.what());
  }
}

IPoly iv(std::size_t i) { return IPoly::variable(i); }

struct ModularVars {
  ModularKLMNPoly E4 = ModularKLMNPoly::variable(0);
  ModularKLMNPoly E6 = ModularKLMNPoly::variable(1);
  ModularKLMNPoly K = ModularKLMNPoly::variable(2);
  ModularKLMNPoly L = ModularKLMNPoly::variable(3);
  ModularKLMNPoly M = ModularKLMNPoly::variable(4);
  ModularKLMNPoly N = ModularKLMNPoly::variable(5);
  ModularKLMNPoly Delta = (E4.pow(3) - E6.pow(2)) * Rational(1, 1728);
};

CurvePolyAB ab(std::size_t i) { return CurvePolyAB::variable(i); }

// ---------------------------------------------------------------- series

void series_suite(const VerifyOptions& o, Checks& out) {
  const int T = q_order_to_trunc(o.order);
  guarded(out, 1, "Delta from eta^24 equals (E4^3 - E6^2)/1728", [&] {
    const ModularSeries& ms = modular_series(o.order);
    FracSeries rhs = (ms.E4.pow(3) - ms.E6.pow(2)) * Rational(1, 1728);
    add(out, 1, "Delta from eta^24 equals (E4^3 - E6^2)/1728", agrees_to(ms.delta, rhs, T),
        "window q^" + std::to_string(o.order));
  });
  guarded(out, 1, "e1 + e2 + e3 = 0", [&] {
    const ModularSeries& ms = modular_series(o.order);
    add(out, 1, "e1 + e2 + e3 = 0", agrees_to(ms.e1 + ms.e2 + ms.e3, FracSeries(), T),
        "window q^" + std::to_string(o.order));
  });

  guarded(out, 10, "classification", [&] {
    const ModularSeries& ms = modular_series(o.order);
    const KLMN& b = klmn(o.order);
    Invariant dk = Invariant::modular(ms.delta, 12) * b.K;
    struct Case {
      std::string name;
      Invariant x;
      CuspClass want;
    };
    std::vector<Case> cases{{"Delta*K", dk, CuspClass::invariant},
                            {"K", b.K, CuspClass::weak_only},
                            {"L", b.L, CuspClass::weak_only},
                            {"M", b.M, CuspClass::weak_only},
                            {"N", b.N, CuspClass::weak_only},
                            {"E4", Invariant::modular(ms.E4, 4), CuspClass::invariant},
                            {"E6", Invariant::modular(ms.E6, 6), CuspClass::invariant}};
    for (const auto& c : cases) {
      CuspClass got = classify(c.x);
      add(out, 10, "classify(" + c.name + ") = " + std::string(to_string(c.want)), got == c.want,
          "got " + std::string(to_string(got)) + ", window q^" + std::to_string(o.order));
    }
  });
}

// ------------------------------------------------------------- jacobians

void jacobian_suite(const VerifyOptions& o, Checks& out) {
  const int T = q_order_to_trunc(o.order);
  guarded(out, 2, "dI/dz = 8 prod (zi^2 - zj^2)", [&] {
    const WeylGenerators& w = weyl_generators();
    ZPoly j = jacobian_z(w.I2, w.I4, w.I6, w.It4);
    add(out, 2, "dI/dz = 8 prod (zi^2 - zj^2)", j == vandermonde_squares() * Rational(8), "exact");
  });
  guarded(out, 2, "d(K,L,M,N)/d(I2,I4,I6,It4) = -eta^12/16", [&] {
    const KLMN& b = klmn(o.order);
    const ModularSeries& ms = modular_series(o.order);
    ISeriesPoly j = jacobian_i(b.K.poly(), b.L.poly(), b.M.poly(), b.N.poly());
    FracSeries c = j.coefficient({0, 0, 0, 0});
    bool constant = (j - ISeriesPoly::constant(c)) == ISeriesPoly();
    add(out, 2, "d(K,L,M,N)/d(I2,I4,I6,It4) = -eta^12/16",
        constant && agrees_to(c, ms.eta.pow(12) * Rational(-1, 16), T), "window q^" + std::to_string(o.order));
  });
  guarded(out, 2, "curve Jacobians", [&] {
    const ModularSeries& ms = modular_series(o.order);
    auto [jab, jcd] = jacobian_klmn(o.order);
    FracSeries d3 = ms.delta.pow(3);
    add(out, 2, "d(a2,b1,b2,b3)/d(K,L,M,N) = -Delta^3/(16 E4)",
        agrees_to(jab, d3 * ms.inv_E4 * Rational(-1, 16), T), "window q^" + std::to_string(o.order));
    add(out, 2, "d(c1,c2,d2,d3)/d(K,L,M,N) = -3 Delta^3/(4 E6)",
        agrees_to(jcd, d3 * ms.inv_E6 * Rational(-3, 4), T), "window q^" + std::to_string(o.order));
  });
}

// ----------------------------------------------------------------- curve

std::array<IPoly, 6> expected_leading(Frame frame) {
  IPoly I2 = iv(kI2), I4 = iv(kI4), I6 = iv(kI6), It4 = iv(kIt4);
  IPoly one = IPoly::constant(1);
  if (frame == Frame::ab) {
    return {one * Rational(1, 12),
            I4 + It4 * Rational(1, 4) - I2 * I2 * Rational(64),
            one * Rational(1, 216),
            I2,
            I4 * Rational(-1, 6) + It4 * Rational(1, 48) + I2 * I2 * Rational(128, 3),
            I6 * Rational(1, 16) - I2 * I4 * Rational(4) + I2 * It4 + I2.pow(3) * Rational(512)};
  }
  return {one * Rational(1, 12),
          I2 * Rational(-12),
          I4 + It4 * Rational(1, 4) + I2 * I2 * Rational(368),
          one * Rational(1, 216),
          I4 * Rational(-1, 6) + It4 * Rational(1, 48) - I2 * I2 * Rational(88, 3),
          I6 * Rational(1, 16) + I2 * I4 * Rational(8) - I2 * It4 * Rational(1, 2) + I2.pow(3) * Rational(896)};
}

void curve_suite(const VerifyOptions& o, Checks& out) {
  const int T = q_order_to_trunc(o.order);
  for (Frame frame : {Frame::ab, Frame::cd}) {
    const auto& names = frame == Frame::ab ? ABVars::names : CDVars::names;
    auto want = expected_leading(frame);
    for (std::size_t i = 0; i < 6; ++i) {
      std::string name = "leading coefficient of " + std::string(names[i]);
      guarded(out, 3, name, [&] {
        IPoly got = leading_ipoly(curve_invariants(frame, o.order)[i]);
        add(out, 3, name, got == want[i], "got " + to_string(got));
      });
    }
  }

  for (std::size_t i : {kA2, kB1, kB2, kB3}) {
    std::string v(ABVars::names[i]);
    CurvePolyAB p = ab(i);
    guarded(out, 4, "frame change commutes with evaluation: " + v, [&] {
      add(out, 4, "frame change commutes with evaluation: " + v,
          agrees_to(evaluate_cd(ab_to_cd(p), o.order), evaluate_ab(p, o.order), T),
          "window q^" + std::to_string(o.order));
    });
    guarded(out, 4, "cd_to_ab(ab_to_cd(" + v + ")) = " + v, [&] {
      add(out, 4, "cd_to_ab(ab_to_cd(" + v + ")) = " + v, cd_to_ab(ab_to_cd(p)) == p, "exact");
    });
  }

  guarded(out, 4, "recovery polynomials", [&] {
    const ModularSeries& ms = modular_series(o.order);
    const KLMN& b = klmn(o.order);
    const Recovery& r = recover_klmn();
    const char* labels[4] = {"Delta K", "Delta^2 L", "Delta^2 M", "Delta^3 N"};
    const Invariant* targets[4] = {&b.K, &b.L, &b.M, &b.N};
    const int powers[4] = {1, 2, 2, 3};
    for (int i = 0; i < 4; ++i) {
      Invariant want = Invariant::modular(ms.delta.pow(powers[i]), 12 * powers[i]) * *targets[i];
      add(out, 4, std::string("ab recovery of ") + labels[i], agrees_to(evaluate_ab(r.ab[i], o.order), want, T),
          to_string(r.ab[i]));
      add(out, 4, std::string("cd recovery of ") + labels[i], agrees_to(evaluate_cd(r.cd[i], o.order), want, T),
          to_string(r.cd[i]));
    }
  });
}

// ----------------------------------------------------------- isomorphism

int oracle_dimension(int k, int m) {
  if ((k - 3 * m) % 2 != 0) return 0;
  const int omega = (k - 3 * m) / 2;
  int total = 0;
  for (int db = 0; 6 * db + m <= k; ++db) {
    int rest = k - m - 6 * db;
    if (rest % 4 != 0) continue;
    total += semiinvariant_dimension(rest / 4, db, omega);
  }
  return total;
}

void isomorphism_suite(const VerifyOptions& o, Checks& out) {
  guarded(out, 5, "enumerator matches semiinvariant oracle", [&] {
    auto table = dimension_table(24, 8);
    int cells = 0;
    std::ostringstream bad;
    for (int k = 0; k <= 24; k += 2) {
      for (int m = 0; m <= 8; m += 2) {
        int want = oracle_dimension(k, m);
        ++cells;
        if (table[k][m] != want) bad << " (k=" << k << ",m=" << m << ": " << table[k][m] << " vs " << want << ")";
      }
    }
    add(out, 5, "enumerator matches semiinvariant oracle for even k <= 24, m <= 8", bad.str().empty(),
        bad.str().empty() ? std::to_string(cells) + " cells agree" : "mismatch:" + bad.str());

    std::ostringstream nz;
    for (int k = 0; k <= 24; ++k) {
      for (int m = 0; m <= 8; ++m) {
        if (k < 3 * m && table[k][m] != 0) nz << " (" << k << "," << m << ")";
      }
    }
    add(out, 6, "dimensions vanish for k < 3m", nz.str().empty(),
        nz.str().empty() ? "k <= 24, m <= 8" : "nonzero at" + nz.str());
  });

  guarded(out, 7, "free-module rank", [&] {
    for (const RankColumn& c : rank_columns(o.rank_kmax, 6)) {
      std::ostringstream d;
      d << "generator weights {";
      for (std::size_t i = 0; i < c.generator_weights.size(); ++i) d << (i ? "," : "") << c.generator_weights[i];
      d << "}, total " << c.total << ", r(m) = " << c.expected_rank << ", stabilized at k = "
        << c.stabilization_weight << " (computed to k = " << o.rank_kmax << ")";
      bool stable = c.stabilization_weight >= 0 && c.stabilization_weight + 10 <= o.rank_kmax;
      add(out, 7, "free-module rank for m = " + std::to_string(c.m),
          c.nonnegative && c.total == c.expected_rank && stable, d.str());
    }
  });

  for (const Generator& g : gordan_generators()) {
    std::string name = "Roberts round trip for " + g.expression;
    guarded(out, 9, name, [&] {
      FormPoly phi = roberts_to_semiinvariant(g.covariant);
      FormPoly cov = roberts_to_covariant(phi);
      bool ok = cov == g.covariant && roberts_to_semiinvariant(cov) == phi;
      ok = ok && order_of(phi) == g.omega && order_of(cov) == g.omega;
      ok = ok && phi.homogeneous_degree(FormVars::alpha_count) == cov.homogeneous_degree(FormVars::alpha_count);
      ok = ok && phi.homogeneous_degree(FormVars::beta_count) == cov.homogeneous_degree(FormVars::beta_count);
      ok = ok && phi.homogeneous_degree(FormVars::alpha_count) == g.d_a;
      ok = ok && phi.homogeneous_degree(FormVars::beta_count) == g.d_b;
      add(out, 9, name, ok, "order " + std::to_string(g.omega));
    });
  }
}

// ---------------------------------------------------------------- table1

void table1_suite(const VerifyOptions& o, Checks& out) {
  const int T = q_order_to_trunc(o.order);
  const auto& gens = gordan_generators();
  {
    std::map<std::pair<int, int>, int> want{{{0, 2}, 1}, {{0, 3}, 1}, {{2, 3}, 1}, {{4, 0}, 1},
                                            {{4, 1}, 1}, {{4, 2}, 1}, {{6, 1}, 1}, {{6, 2}, 1},
                                            {{6, 3}, 1}, {{8, 0}, 1}, {{10, 1}, 1}, {{12, 0}, 2},
                                            {{12, 1}, 1}, {{18, 0}, 1}};
    std::map<std::pair<int, int>, int> got;
    std::array<int, 4> by_omega{};
    bool meta = true;
    for (const auto& g : gens) {
      ++got[{g.m, g.omega}];
      if (g.omega >= 0 && g.omega < 4) ++by_omega[g.omega];
      meta = meta && uv_order(g.covariant) == g.omega &&
             g.covariant.homogeneous_degree(FormVars::alpha_count) == g.d_a &&
             g.covariant.homogeneous_degree(FormVars::beta_count) == g.d_b;
    }
    std::ostringstream d;
    d << gens.size() << " generators, per-order totals (" << by_omega[0] << "," << by_omega[1] << ","
      << by_omega[2] << "," << by_omega[3] << ")";
    add(out, 8, "generator count and (m, omega) cells", gens.size() == 15 && got == want && meta, d.str());
  }

  std::vector<CurvePolyAB> images;
  for (const auto& g : gens) {
    FormPoly lead = roberts_to_semiinvariant(g.covariant);
    add(out, 8, "leading coefficient of " + g.expression + " is a semiinvariant", is_semiinvariant(lead));
    images.push_back(psi_inverse(lead));
    add(out, 8, "psi inverse of " + g.expression + " is a triality invariant", is_triality_invariant(images.back()));
  }

  ModularVars v;
  struct Line {
    std::size_t index;
    CurvePolyAB ab_form;
    ModularKLMNPoly klmn_form;
  };
  std::vector<Line> lines{
      {0, ab(kA0), v.E4 * Rational(1, 12)},
      {1, ab(kB0), v.E6 * Rational(1, 216)},
      {2, ab(kA0) * ab(kB1) * Rational(1, 3), v.Delta * v.K * Rational(1, 36)},
      {3, ab(kA0) * ab(kA2) * Rational(2),
       (v.Delta * v.K.pow(2) * Rational(6) - v.E4 * v.E6 * v.L + v.E4.pow(2) * v.M) * Rational(1, 144)},
      {4, (ab(kA0) * ab(kB2) + ab(kA2) * ab(kB0) * Rational(3)) * Rational(1, 3),
       (-(v.E6.pow(2) + v.Delta * Rational(576)) * v.L + v.E4 * v.E6 * v.M) * Rational(1, 3456)},
      {5, (ab(kB0) * ab(kB2) * Rational(3) - ab(kB1).pow(2)) * Rational(2, 9),
       (v.E4 * v.Delta * v.K.pow(2) * Rational(-12) - v.E4.pow(2) * v.E6 * v.L + v.E6.pow(2) * v.M) *
           Rational(1, 93312)}};
  for (const auto& line : lines) {
    const Generator& g = gens[line.index];
    const CurvePolyAB& got_ab = images[line.index];
    add(out, 8, g.expression + " in a, b", got_ab == line.ab_form, to_string(got_ab));
    guarded(out, 8, g.expression + " in E4, E6, K, L, M, N", [&] {
      Invariant x = evaluate_ab(got_ab, o.order);
      KLMNRepresentation rep = express_in_klmn(x);
      Invariant forward = evaluate_modular_klmn(line.klmn_form, g.weight(), g.m, o.order);
      add(out, 8, g.expression + " in E4, E6, K, L, M, N",
          rep.exact == line.klmn_form && agrees_to(forward, x, T), to_string(rep.exact));
    });
  }

  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string name = "M_*[K,L,M,N] membership of " + gens[i].expression;
    guarded(out, 8, name, [&] {
      Invariant x = evaluate_ab(images[i], o.order);
      KLMNRepresentation rep = express_in_klmn(x);
      Invariant forward = evaluate_modular_klmn(rep.exact, x.weight(), x.degree(), o.order);
      add(out, 8, name, agrees_to(forward, x, T), std::to_string(rep.exact.size()) + " terms");
    });
  }
}

}  // namespace

bool agrees_to(const FracSeries& a, const FracSeries& b, int trunc) {
  FracSeries d = a - b;
  return d.trunc() >= trunc && d.truncated(trunc).is_zero();
}

bool agrees_to(const Invariant& a, const Invariant& b, int trunc) {
  if (a.weight() != b.weight() || a.degree() != b.degree()) return false;
  Invariant d = a - b;
  for (const auto& [e, c] : d.poly().terms()) {
    if (!agrees_to(c, FracSeries(), trunc)) return false;
  }
  // Coefficients that cancelled exactly still need a long enough window.
  return a.trunc() >= trunc && b.trunc() >= trunc;
}

std::vector<RankColumn> rank_columns(int k_max, int m_max) {
  auto table = dimension_table(k_max, m_max);
  auto r = rank_series(m_max);
  std::vector<RankColumn> out;
  for (int m = 0; m <= m_max; m += 2) {
    std::vector<int> column(k_max + 1);
    for (int k = 0; k <= k_max; ++k) column[k] = table[k][m];
    RankColumn c;
    c.m = m;
    c.expected_rank = r[m];
    auto g = free_generator_counts(column);
    for (int k = 0; k <= k_max; ++k) {
      if (g[k] < 0) c.nonnegative = false;
      for (int i = 0; i < g[k]; ++i) c.generator_weights.push_back(k);
      c.total += g[k];
      if (g[k] != 0) c.stabilization_weight = k;
    }
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"series", "jacobians", "curve", "isomorphism", "table1", "all"};
  return names;
}

std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& opts) {
  using Fn = void (*)(const VerifyOptions&, Checks&);
  static const std::vector<std::pair<std::string_view, Fn>> suites{{"series", series_suite},
                                                                   {"jacobians", jacobian_suite},
                                                                   {"curve", curve_suite},
                                                                   {"isomorphism", isomorphism_suite},
                                                                   {"table1", table1_suite}};
  Checks out;
  bool found = false;
  for (const auto& [name, fn] : suites) {
    if (suite == "all" || suite == name) {
      fn(opts, out);
      found = true;
    }
  }
  if (!found) throw UnknownSuite("unknown suite '" + std::string(suite) + "'");
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.criterion < b.criterion; });
  return out;
}

}  // namespace triality
