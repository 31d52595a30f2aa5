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

#include "triality/json_io.hpp"

#include <stdexcept>

#include "triality/errors.hpp"

namespace triality {

namespace {

Json trunc_json(int trunc) { return trunc >= FracSeries::kExact ? Json(nullptr) : Json(trunc); }

Json series_terms(const FracSeries& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(Json::array({t.exponent, to_fraction_string(t.coeff)}));
  return terms;
}

}  // namespace

Json to_json(const FracSeries& s) {
  return Json{{"kind", "series"},
              {"lattice", FracSeries::kLattice},
              {"trunc", trunc_json(s.trunc())},
              {"terms", series_terms(s)}};
}

FracSeries series_from_json(const Json& j) {
  if (j.at("lattice").get<int>() != FracSeries::kLattice) {
    throw std::invalid_argument("unsupported lattice denominator");
  }
  int trunc = j.at("trunc").is_null() ? FracSeries::kExact : j.at("trunc").get<int>();
  std::vector<std::pair<int, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace_back(t.at(0).get<int>(), parse_rational(t.at(1).get<std::string>()));
  }
  return FracSeries::from_terms(std::move(terms), trunc);
}

Json to_json(const Invariant& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.poly().terms()) {
    terms.push_back(Json{{"monomial", Json::array({e[0], e[1], e[2], e[3]})},
                         {"trunc", trunc_json(c.trunc())},
                         {"series", series_terms(c)}});
  }
  return Json{{"kind", "invariant"},
              {"variables", Json::array({"I2", "I4", "I6", "It4"})},
              {"grading", Json{{"weight", x.weight()}, {"degree", x.degree()}}},
              {"lattice", FracSeries::kLattice},
              {"trunc", trunc_json(x.trunc())},
              {"terms", terms}};
}

Json to_json(const KLMNPoly& x) {
  Json terms = Json::array();
  int trunc = FracSeries::kExact;
  for (const auto& [e, c] : x.terms.terms()) {
    trunc = std::min(trunc, c.trunc());
    terms.push_back(Json{{"monomial", Json::array({e[0], e[1], e[2], e[3]})},
                         {"trunc", trunc_json(c.trunc())},
                         {"series", series_terms(c)}});
  }
  return Json{{"kind", "klmn_series"},
              {"variables", Json::array({"K", "L", "M", "N"})},
              {"grading", Json{{"weight", x.weight}, {"degree", x.degree}}},
              {"lattice", FracSeries::kLattice},
              {"trunc", trunc_json(trunc)},
              {"terms", terms}};
}

Json to_json(const ModularKLMNPoly& p, int weight, int degree) {
  Json j = poly_terms_json(p);
  return Json{{"kind", "modular_klmn"},
              {"grading", Json{{"weight", weight}, {"degree", degree}}},
              {"trunc", nullptr},
              {"variables", j["variables"]},
              {"terms", j["terms"]}};
}

Json to_json(const CurvePolyAB& p) {
  Json grading = nullptr;
  if (auto g = grading_of(p)) {
    grading = Json{{"weight", g->weight}, {"degree", g->degree}, {"d_a", g->d_a}, {"d_b", g->d_b}};
  }
  Json j = poly_terms_json(p);
  return Json{{"kind", "curve_poly"},
              {"frame", "ab"},
              {"grading", grading},
              {"laurent", Json{{"b0_min", p.min_exponent(kB0)}}},
              {"variables", j["variables"]},
              {"terms", j["terms"]}};
}

Json to_json(const CurvePolyCD& p) {
  Json grading = nullptr;
  if (auto g = grading_of(p)) grading = Json{{"weight", g->first}, {"degree", g->second}};
  Json j = poly_terms_json(p);
  return Json{{"kind", "curve_poly"},
              {"frame", "cd"},
              {"grading", grading},
              {"laurent", Json{{"c0_min", p.min_exponent(kC0)}}},
              {"variables", j["variables"]},
              {"terms", j["terms"]}};
}

Json to_json(const FormPoly& p) {
  Json grading = nullptr;
  auto da = p.homogeneous_degree(FormVars::alpha_count);
  auto db = p.homogeneous_degree(FormVars::beta_count);
  if (da && db) {
    grading = Json{{"d_a", *da}, {"d_b", *db}};
    try {
      grading["order_omega"] = order_of(p);
    } catch (const Error&) {
      grading["order_omega"] = nullptr;
    }
  }
  Json j = poly_terms_json(p);
  return Json{{"kind", "form_poly"}, {"grading", grading}, {"variables", j["variables"]}, {"terms", j["terms"]}};
}

Json to_json(const AnsatzBasis& b) {
  Json monos = Json::array();
  for (const auto& e : b.monomials) monos.push_back(to_string(CurvePolyAB::monomial(e, 1)));
  Json basis = Json::array();
  for (const auto& p : b.basis) {
    Json j = to_json(p);
    j["text"] = to_string(p);
    basis.push_back(j);
  }
  return Json{{"kind", "ansatz_basis"},
              {"grading", Json{{"weight", b.weight}, {"degree", b.degree}}},
              {"dimension", b.basis.size()},
              {"monomials", monos},
              {"basis", basis}};
}

Json to_json(const Generator& g) {
  Json cov = to_json(g.covariant);
  return Json{{"kind", "generator"},
              {"expression", g.expression},
              {"grading",
               Json{{"weight", g.weight()}, {"degree", g.m}, {"d_a", g.d_a}, {"d_b", g.d_b}, {"order_omega", g.omega}}},
              {"covariant", Json{{"variables", cov["variables"]}, {"terms", cov["terms"]}}},
              {"text", to_string(g.covariant)}};
}

}  // namespace triality
