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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triality/rational.hpp"

namespace triality {

/// Truncated Laurent series in t = q^(1/24) with exact rational coefficients.
///
/// Exponents are stored in t-units, so q^n is t^(24n), q^(1/2) is t^12 and
/// eta's prefactor q^(1/24) is t^1. Every term with exponent >= trunc() is
/// unknown. A series whose trunc() equals kExact is a finite, exactly known
/// Laurent polynomial (constants, monomials).
///
/// Truncation is propagated pessimistically: a + b is known below
/// min(trunc a, trunc b); a * b is known below
/// min(trunc a + val b, trunc b + val a). Comparisons only look at the
/// common window.
class FracSeries {
 public:
  struct Term {
    int exponent;
    Rational coeff;
  };

  static constexpr int kLattice = 24;
  static constexpr int kExact = 1 << 28;

  /// Exact zero.
  FracSeries() = default;

  static FracSeries constant(const Rational& c);
  static FracSeries monomial(int t_exponent, const Rational& c);
  /// O(t^trunc): nothing known below trunc except that it is zero.
  static FracSeries zero(int trunc);
  /// Builds from arbitrary (exponent, coefficient) pairs. Duplicates are
  /// summed; zero coefficients and exponents >= trunc are dropped.
  static FracSeries from_terms(std::vector<std::pair<int, Rational>> terms, int trunc);

  int trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  const std::vector<Term>& terms() const { return terms_; }

  /// No nonzero coefficient below trunc.
  bool is_zero() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }

  /// Lowest exponent with nonzero coefficient, if any is known.
  std::optional<int> valuation() const;
  /// valuation(), or trunc() when the series vanishes in its window. This is
  /// the lower bound used by the truncation rule for products.
  int effective_valuation() const;

  /// Coefficient of t^e. Throws std::out_of_range when e >= trunc().
  Rational coeff(int t_exponent) const;

  FracSeries truncated(int new_trunc) const;
  /// Multiplication by t^shift; trunc moves with the terms.
  FracSeries shifted(int shift) const;

  FracSeries operator-() const;
  FracSeries& operator+=(const FracSeries& other);
  FracSeries& operator-=(const FracSeries& other);
  FracSeries& operator*=(const FracSeries& other);
  FracSeries& operator*=(const Rational& scalar);

  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  friend FracSeries operator*(FracSeries a, const Rational& s) { return a *= s; }
  friend FracSeries operator*(const Rational& s, FracSeries a) { return a *= s; }

  /// Equality on the common window min(trunc a, trunc b).
  friend bool operator==(const FracSeries& a, const FracSeries& b);

  FracSeries pow(unsigned n) const;

  /// True when every stored exponent is a multiple of step.
  bool exponents_divisible_by(int step) const;

  /// Text rendering in powers of q, e.g. "1 + 240*q + 2160*q^2 + O(q^3)".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // strictly increasing exponents, no zero coeffs
  int trunc_ = kExact;

  void drop_at_or_above(int bound);
};

/// Multiplicative inverse up to truncation. The result has valuation
/// -valuation(a) and relative precision equal to that of a. Throws ZeroSeries
/// if a has no nonzero term in its window, and std::domain_error for exact
/// series with more than one term (the inverse would be infinite).
FracSeries invert(const FracSeries& a);

/// q-order (in units of q) to trunc (in units of t).
constexpr int q_order_to_trunc(int order) { return FracSeries::kLattice * order; }

}  // namespace triality
