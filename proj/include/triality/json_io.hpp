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

#include "json.hpp"
#include "triality/covariants.hpp"
#include "triality/enumerator.hpp"
#include "triality/frac_series.hpp"
#include "triality/invariant.hpp"
#include "triality/poly.hpp"
#include "triality/sw_curve.hpp"

namespace triality {

using Json = nlohmann::ordered_json;

/// {"kind": "series", "lattice": 24, "trunc": T | null, "terms": [[e, "n/d"], ...]}
/// with exponents in units of q^(1/24); trunc is null for exact series.
Json to_json(const FracSeries& s);
FracSeries series_from_json(const Json& j);

/// {"variables": [...], "terms": [[[e...], "n/d"], ...]} in canonical order.
template <class Vars>
Json poly_terms_json(const Poly<Vars, Rational>& p) {
  Json vars = Json::array();
  for (auto n : Vars::names) vars.push_back(std::string(n));
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json ex = Json::array();
    for (int x : e) ex.push_back(x);
    terms.push_back(Json::array({ex, to_fraction_string(c)}));
  }
  return Json{{"variables", vars}, {"terms", terms}};
}

template <class Vars>
Poly<Vars, Rational> poly_from_json(const Json& j) {
  Poly<Vars, Rational> p;
  for (const auto& t : j.at("terms")) {
    typename Poly<Vars, Rational>::Exps e{};
    const auto& ex = t.at(0);
    if (ex.size() != Vars::size) throw std::invalid_argument("exponent vector has wrong length");
    for (std::size_t i = 0; i < Vars::size; ++i) e[i] = ex.at(i).template get<int>();
    p.add_term(e, parse_rational(t.at(1).template get<std::string>()));
  }
  return p;
}

Json to_json(const Invariant& x);
Json to_json(const KLMNPoly& x);
Json to_json(const ModularKLMNPoly& p, int weight, int degree);
Json to_json(const CurvePolyAB& p);
Json to_json(const CurvePolyCD& p);
Json to_json(const FormPoly& p);
Json to_json(const AnsatzBasis& b);
Json to_json(const Generator& g);

}  // namespace triality
