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
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triality/frac_series.hpp"
#include "triality/rational.hpp"

namespace triality {

template <std::size_t N>
using Exponents = std::array<int, N>;

template <std::size_t N>
int total_degree(const Exponents<N>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with the first variable largest.
template <std::size_t N>
struct GradedLexGreater {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  /// Terms whose coefficient satisfies this are never stored.
  static bool is_exact_zero(const Rational& c) { return sgn(c) == 0; }
  /// Used by equality: the coefficient carries no information.
  static bool is_negligible(const Rational& c) { return sgn(c) == 0; }
  static Rational one() { return 1; }
};

template <>
struct CoeffTraits<FracSeries> {
  static bool is_exact_zero(const FracSeries& c) { return c.is_exact_zero(); }
  static bool is_negligible(const FracSeries& c) { return c.is_zero(); }
  static FracSeries one() { return FracSeries::constant(1); }
};

/// Sparse multivariate Laurent polynomial over the variables described by
/// Vars (which provides `size` and `names`). Coefficients are Rational or
/// FracSeries. Negative exponents are representable; callers that need a
/// genuine polynomial check is_polynomial().
template <class Vars, class Coeff = Rational>
class Poly {
 public:
  static constexpr std::size_t N = Vars::size;
  using Exps = Exponents<N>;
  using TermMap = std::map<Exps, Coeff, GradedLexGreater<N>>;
  using Traits = CoeffTraits<Coeff>;

  Poly() = default;

  static Poly constant(const Coeff& c) { return monomial(Exps{}, c); }

  static Poly monomial(const Exps& e, const Coeff& c) {
    Poly p;
    p.add_term(e, c);
    return p;
  }

  static Poly variable(std::size_t index, int power = 1) {
    Exps e{};
    e.at(index) = power;
    return monomial(e, Traits::one());
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c to the coefficient of x^e, erasing the term if it cancels.
  void add_term(const Exps& e, const Coeff& c) {
    if (Traits::is_exact_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_exact_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff() : it->second;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exps e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend Poly operator*(Poly a, const Rational& s) {
    if (is_zero_scalar(s)) return Poly();
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend Poly operator*(const Rational& s, Poly a) { return std::move(a) * s; }

  /// Multiplies every coefficient by c (c is a coefficient-ring element).
  Poly scaled_by(const Coeff& s) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  /// Equality up to negligible coefficients (for series: the common window).
  friend bool operator==(const Poly& a, const Poly& b) {
    Poly d = a - b;
    return std::all_of(d.terms_.begin(), d.terms_.end(),
                       [](const auto& t) { return Traits::is_negligible(t.second); });
  }

  Poly pow(unsigned n) const {
    Poly result = constant(Traits::one());
    Poly base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  Poly derivative(std::size_t var) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exps d = e;
      d[var] -= 1;
      out.add_term(d, c * Rational(e[var]));
    }
    return out;
  }

  /// Smallest exponent of var over all terms (0 for the zero polynomial).
  int min_exponent(std::size_t var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] < m) m = e[var];
      first = false;
    }
    return m;
  }

  int max_exponent(std::size_t var) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_) {
      for (int x : e) {
        if (x < 0) return false;
      }
    }
    return true;
  }

  /// Value of the weighted degree sum_i weights[i]*e[i] if all terms agree.
  std::optional<int> homogeneous_degree(const std::array<int, N>& weights) const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (std::size_t i = 0; i < N; ++i) d += weights[i] * e[i];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    Poly<Vars, Out> out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

 private:
  static bool is_zero_scalar(const Rational& s) { return sgn(s) == 0; }

  TermMap terms_;
};

/// Caches x_i^e (e may be negative when an inverse is supplied) in a target
/// ring R, for substitution homomorphisms.
template <class R>
class PowerCache {
 public:
  PowerCache(std::vector<R> bases, R one, std::vector<std::optional<R>> inverses = {})
      : bases_(std::move(bases)), one_(std::move(one)), inverses_(std::move(inverses)) {
    inverses_.resize(bases_.size());
    positive_.resize(bases_.size());
    negative_.resize(bases_.size());
  }

  const R& power(std::size_t var, int e) {
    if (e >= 0) return power_from(positive_[var], bases_[var], e);
    if (!inverses_[var]) {
      throw std::domain_error("negative power of a variable without a supplied inverse");
    }
    return power_from(negative_[var], *inverses_[var], -e);
  }

 private:
  const R& power_from(std::vector<R>& table, const R& base, int e) {
    if (table.empty()) table.push_back(one_);
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * base);
    return table[static_cast<std::size_t>(e)];
  }

  std::vector<R> bases_;
  R one_;
  std::vector<std::optional<R>> inverses_;
  std::vector<std::vector<R>> positive_;
  std::vector<std::vector<R>> negative_;
};

/// Ring homomorphism determined by images of the variables: each term
/// c * x^e maps to embed(c) * prod cache.power(i, e_i).
template <class R, class Vars, class Coeff, class Embed>
R substitute(const Poly<Vars, Coeff>& p, PowerCache<R>& cache, Embed&& embed) {
  R result{};
  for (const auto& [e, c] : p.terms()) {
    R term = embed(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * cache.power(i, e[i]);
    }
    result += term;
  }
  return result;
}

/// Renders a polynomial as text, e.g. "2*a0*a2 - 1/2*al1^2".
template <class Vars>
std::string to_string(const Poly<Vars, Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < Vars::size; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(Vars::names[i]);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string body;
    if (mono.empty()) {
      body = to_pretty_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_pretty_string(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace triality
