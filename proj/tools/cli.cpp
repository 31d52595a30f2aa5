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

#include "cli.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "form_expr.hpp"
#include "triality/covariants.hpp"
#include "triality/enumerator.hpp"
#include "triality/errors.hpp"
#include "triality/json_io.hpp"
#include "triality/modular.hpp"
#include "triality/sw_curve.hpp"
#include "triality/verify.hpp"

namespace triality::cli {

namespace {

struct Config {
  int order = 24;
  std::string format = "json";
  bool json() const { return format == "json"; }
};

using Expansion = std::variant<FracSeries, Invariant>;

const std::vector<std::string>& expandable_names() {
  static const std::vector<std::string> names{"E4", "E6", "Delta", "eta", "theta2", "theta3", "theta4", "e1",
                                              "e2", "e3", "K",     "L",   "M",      "N",      "a0",     "a2",
                                              "b0", "b1", "b2",    "b3",  "c0",     "c1",     "c2",     "d0",
                                              "d2", "d3"};
  return names;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

Expansion expand_name(const std::string& name, int order) {
  const ModularSeries& ms = modular_series(order);
  if (name == "E4") return ms.E4;
  if (name == "E6") return ms.E6;
  if (name == "Delta") return ms.delta;
  if (name == "eta") return ms.eta;
  if (name == "theta2") return theta_const(2, order);
  if (name == "theta3") return theta_const(3, order);
  if (name == "theta4") return theta_const(4, order);
  if (name == "e1") return ms.e1;
  if (name == "e2") return ms.e2;
  if (name == "e3") return ms.e3;
  const KLMN& b = klmn(order);
  if (name == "K") return b.K;
  if (name == "L") return b.L;
  if (name == "M") return b.M;
  if (name == "N") return b.N;
  for (std::size_t i = 0; i < 6; ++i) {
    if (ABVars::names[i] == name) return curve_invariants(Frame::ab, order)[i];
    if (CDVars::names[i] == name) return curve_invariants(Frame::cd, order)[i];
  }
  throw UnknownName("unknown name '" + name + "'; valid names: " + join(expandable_names()));
}

std::string invariant_text(const Invariant& x) {
  std::ostringstream os;
  os << "weight " << x.weight() << ", degree " << x.degree() << "\n";
  for (const auto& [e, c] : x.poly().terms()) {
    os << "  [" << to_string(IPoly::monomial(e, 1)) << "] " << c.to_string() << "\n";
  }
  return os.str();
}

int cmd_expand(const Config& cfg, const std::string& name, std::ostream& out) {
  Expansion x = expand_name(name, cfg.order);
  if (const auto* s = std::get_if<FracSeries>(&x)) {
    if (cfg.json()) {
      Json j = to_json(*s);
      j["name"] = name;
      out << j.dump(2) << "\n";
    } else {
      out << name << " = " << s->to_string() << "\n";
    }
    return 0;
  }
  const Invariant& inv = std::get<Invariant>(x);
  if (cfg.json()) {
    Json j = to_json(inv);
    j["name"] = name;
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << invariant_text(inv);
  }
  return 0;
}

int cmd_basis(const Config& cfg, int k, int m, std::ostream& out) {
  AnsatzBasis b = triality_basis(k, m);
  if (cfg.json()) {
    out << to_json(b).dump(2) << "\n";
  } else {
    out << "weight " << k << ", degree " << m << ": dimension " << b.basis.size() << "\n";
    for (const auto& p : b.basis) out << "  " << to_string(p) << "\n";
  }
  return 0;
}

int cmd_dims(const Config& cfg, int kmax, int mmax, std::ostream& out) {
  auto table = dimension_table(kmax, mmax);
  if (cfg.json()) {
    Json rows = Json::array();
    for (int k = 0; k <= kmax; ++k) rows.push_back(Json{{"k", k}, {"dims", table[k]}});
    out << Json{{"kind", "dimension_table"}, {"kmax", kmax}, {"mmax", mmax}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }
  out << std::setw(4) << "k\\m";
  for (int m = 0; m <= mmax; m += 2) out << std::setw(5) << m;
  out << "\n";
  for (int k = 0; k <= kmax; k += 2) {
    out << std::setw(4) << k;
    for (int m = 0; m <= mmax; m += 2) out << std::setw(5) << table[k][m];
    out << "\n";
  }
  return 0;
}

int cmd_generators(const Config& cfg, std::ostream& out) {
  const auto& gens = gordan_generators();
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& g : gens) {
      Json j = to_json(g);
      j["semiinvariant"] = to_string(roberts_to_semiinvariant(g.covariant));
      j["triality_invariant"] = to_string(psi_inverse(roberts_to_semiinvariant(g.covariant)));
      arr.push_back(j);
    }
    out << Json{{"kind", "generators"}, {"count", gens.size()}, {"generators", arr}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& g : gens) {
    out << "[" << g.d_a << "," << g.d_b << "]_{" << g.m << "," << g.omega << "} = " << g.expression
        << "  (weight " << g.weight() << ")\n    " << to_string(psi_inverse(roberts_to_semiinvariant(g.covariant)))
        << "\n";
  }
  return 0;
}

int cmd_transvect(const Config& cfg, const std::string& left, const std::string& right, int index,
                  std::ostream& out) {
  FormPoly a = parse_form(left);
  FormPoly b = parse_form(right);
  FormPoly t = transvectant(a, b, index);
  if (cfg.json()) {
    Json j = to_json(t);
    j["expression"] = "<" + left + "," + right + ">" + std::to_string(index);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(t) << "\n";
  }
  return 0;
}

int cmd_membership(const Config& cfg, const std::string& text, std::ostream& out) {
  CurvePolyAB p = parse_poly<ABVars>(text);
  CurvePolyCD image = ab_to_cd(p);
  bool member = is_triality_invariant(p);
  Json j{{"kind", "membership"}, {"input", to_json(p)}, {"triality_invariant", member},
         {"c0_min_exponent", image.min_exponent(kC0)}};
  std::string klmn_text;
  if (member && !p.is_zero()) {
    Invariant x = evaluate_ab(p, cfg.order);
    j["classification"] = std::string(to_string(classify(x)));
    KLMNRepresentation rep = express_in_klmn(x);
    j["klmn"] = to_json(rep.exact, x.weight(), x.degree());
    j["klmn"]["text"] = to_string(rep.exact);
    klmn_text = to_string(rep.exact);
  }
  if (cfg.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << to_string(p) << ": " << (member ? "triality invariant" : "not a triality invariant") << "\n";
    if (!klmn_text.empty()) out << "  = " << klmn_text << "\n";
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite, std::ostream& out) {
  VerifyOptions opts;
  opts.order = cfg.order;
  auto checks = run_suite(suite, opts);
  bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back(Json{{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << Json{{"kind", "verification"}, {"suite", suite}, {"order", cfg.order}, {"pass", ok}, {"checks", arr}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS" : "FAIL") << " [" << c.criterion << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with D4 triality invariant Jacobi forms"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--order", cfg.order, "truncation order in powers of q")->check(CLI::Range(2, 2000));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string name, suite, left, right, poly;
  int weight = 0, degree = 0, kmax = 24, mmax = 8, index = 0;
  bool gen_json = false;

  auto* expand = app.add_subcommand("expand", "q-expansion of a named object");
  expand->add_option("name", name, "object name")->required();
  auto* basis = app.add_subcommand("basis", "basis of triality invariants of given weight and degree");
  basis->add_option("--weight,-k", weight)->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--degree,-m", degree)->required()->check(CLI::NonNegativeNumber);
  auto* dims = app.add_subcommand("dims", "table of dimensions");
  dims->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  dims->add_option("--mmax", mmax)->check(CLI::NonNegativeNumber);
  auto* gens = app.add_subcommand("generators", "the fifteen transvectant generators");
  gens->add_flag("--json", gen_json, "same as --format json");
  auto* tv = app.add_subcommand("transvect", "transvectant of two form expressions");
  tv->add_option("--left", left)->required();
  tv->add_option("--right", right)->required();
  tv->add_option("--index,-i", index)->required()->check(CLI::NonNegativeNumber);
  auto* mem = app.add_subcommand("membership", "test a polynomial in a0, a2, b0..b3 for triality invariance");
  mem->add_option("poly", poly, "polynomial expression")->required();
  auto* ver = app.add_subcommand("verify", "run an identity suite");
  ver->add_option("suite", suite, join(suite_names()))->required();
  for (auto* sub : {expand, basis, dims, gens, tv, mem, ver}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (gen_json) cfg.format = "json";

  try {
    if (*expand) return cmd_expand(cfg, name, out);
    if (*basis) return cmd_basis(cfg, weight, degree, out);
    if (*dims) return cmd_dims(cfg, kmax, mmax, out);
    if (*gens) return cmd_generators(cfg, out);
    if (*tv) return cmd_transvect(cfg, left, right, index, out);
    if (*mem) return cmd_membership(cfg, poly, out);
    if (*ver) return cmd_verify(cfg, suite, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace triality::cli
