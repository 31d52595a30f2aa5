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

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "triality/covariants.hpp"
#include "triality/errors.hpp"
#include "triality/poly.hpp"

namespace triality::cli {

/// Recursive-descent parser for polynomial expressions over Vars:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (['*' | '/'] factor)*      ('/' only by a number)
///   factor := atom ['^' integer]
///   atom   := number | name | '(' expr ')' | extension
/// `extension` lets a caller add atoms (named forms, transvectants).
template <class Vars>
class PolyParser {
 public:
  using P = Poly<Vars>;
  using Extension = std::function<std::optional<P>(PolyParser&)>;

  explicit PolyParser(std::string_view text, Extension ext = {}) : s_(text), ext_(std::move(ext)) {}

  P parse() {
    P p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  P expr() {
    skip();
    P out;
    bool negate = accept('-');
    out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  /// Consumes `word` if it is the next identifier.
  bool accept_word(std::string_view word) {
    skip();
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    if (s_.substr(pos_, end - pos_) == word) {
      pos_ = end;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  P term() {
    P out = factor();
    while (true) {
      if (accept('*')) {
        out *= factor();
      } else if (accept('/')) {
        skip();
        Rational d = number();
        if (sgn(d) == 0) fail("division by zero");
        out = out * Rational(1 / d);
      } else {
        return out;
      }
    }
  }

  P factor() {
    P base = atom();
    if (accept('^')) base = base.pow(static_cast<unsigned>(integer()));
    return base;
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(std::string(s_.substr(start, pos_ - start)));
  }

  P atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (ext_) {
      if (auto p = ext_(*this)) return *p;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return P::constant(number());
    if (accept('(')) {
      P p = expr();
      expect(')');
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
      std::string_view name = s_.substr(pos_, end - pos_);
      for (std::size_t i = 0; i < Vars::size; ++i) {
        if (Vars::names[i] == name) {
          pos_ = end;
          return P::variable(i);
        }
      }
      throw UnknownName("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Extension ext_;
};

template <class Vars>
Poly<Vars> parse_poly(std::string_view text) {
  return PolyParser<Vars>(text).parse();
}

/// Form expressions: f, g, P = <g,g>2, Q = <g,P>1, <A,B>i, products,
/// powers, sums, and the coefficient variables alpha0..beta3, u, v.
FormPoly parse_form(std::string_view text);

}  // namespace triality::cli
