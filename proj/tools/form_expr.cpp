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

#include "form_expr.hpp"

namespace triality::cli {

FormPoly parse_form(std::string_view text) {
  using Parser = PolyParser<FormVars>;
  static const FormPoly P = transvectant(form_g(), form_g(), 2);
  static const FormPoly Q = transvectant(form_g(), P, 1);
  Parser::Extension ext = [](Parser& p) -> std::optional<FormPoly> {
    if (p.accept('<')) {
      FormPoly left = p.expr();
      p.expect(',');
      FormPoly right = p.expr();
      p.expect('>');
      return transvectant(left, right, p.integer());
    }
    if (p.accept_word("f")) return form_f();
    if (p.accept_word("g")) return form_g();
    if (p.accept_word("P")) return P;
    if (p.accept_word("Q")) return Q;
    return std::nullopt;
  };
  return Parser(text, ext).parse();
}

}  // namespace triality::cli
