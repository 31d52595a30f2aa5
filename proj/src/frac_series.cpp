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

#include "triality/frac_series.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "triality/errors.hpp"

namespace triality {
namespace {

int clamp_trunc(std::int64_t t) {
  return static_cast<int>(std::min<std::int64_t>(t, FracSeries::kExact));
}

std::string q_power(int e) {
  if (e == 0) return "";
  int g = std::gcd(std::abs(e), FracSeries::kLattice);
  int num = e / g;
  int den = FracSeries::kLattice / g;
  if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

FracSeries FracSeries::constant(const Rational& c) { return monomial(0, c); }

FracSeries FracSeries::monomial(int t_exponent, const Rational& c) {
  FracSeries s;
  if (!triality::is_zero(c)) s.terms_.push_back({t_exponent, c});
  return s;
}

FracSeries FracSeries::zero(int trunc) {
  FracSeries s;
  s.trunc_ = clamp_trunc(trunc);
  return s;
}

FracSeries FracSeries::from_terms(std::vector<std::pair<int, Rational>> terms, int trunc) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FracSeries s;
  s.trunc_ = clamp_trunc(trunc);
  for (auto& [e, c] : terms) {
    if (e >= s.trunc_) break;
    if (!s.terms_.empty() && s.terms_.back().exponent == e) {
      s.terms_.back().coeff += c;
    } else {
      s.terms_.push_back({e, std::move(c)});
    }
  }
  std::erase_if(s.terms_, [](const Term& t) { return triality::is_zero(t.coeff); });
  return s;
}

std::optional<int> FracSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

int FracSeries::effective_valuation() const {
  return terms_.empty() ? trunc_ : terms_.front().exponent;
}

Rational FracSeries::coeff(int t_exponent) const {
  if (t_exponent >= trunc_) {
    throw std::out_of_range("coefficient t^" + std::to_string(t_exponent) +
                            " lies beyond truncation t^" + std::to_string(trunc_));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t_exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == t_exponent) return it->coeff;
  return 0;
}

void FracSeries::drop_at_or_above(int bound) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bound,
                             [](const Term& t, int e) { return t.exponent < e; });
  terms_.erase(it, terms_.end());
}

FracSeries FracSeries::truncated(int new_trunc) const {
  FracSeries s = *this;
  s.trunc_ = std::min(trunc_, clamp_trunc(new_trunc));
  s.drop_at_or_above(s.trunc_);
  return s;
}

FracSeries FracSeries::shifted(int shift) const {
  FracSeries s = *this;
  for (auto& t : s.terms_) t.exponent += shift;
  if (!is_exact()) s.trunc_ = clamp_trunc(static_cast<std::int64_t>(trunc_) + shift);
  return s;
}

FracSeries FracSeries::operator-() const {
  FracSeries s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

FracSeries& FracSeries::operator+=(const FracSeries& other) {
  int new_trunc = std::min(trunc_, other.trunc_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int ea = a != terms_.end() ? a->exponent : kExact;
    int eb = b != other.terms_.end() ? b->exponent : kExact;
    int e = std::min(ea, eb);
    if (e >= new_trunc) break;
    if (ea == eb) {
      Rational c = a->coeff + b->coeff;
      if (!triality::is_zero(c)) merged.push_back({e, std::move(c)});
      ++a;
      ++b;
    } else if (ea < eb) {
      merged.push_back(*a++);
    } else {
      merged.push_back(*b++);
    }
  }
  terms_ = std::move(merged);
  trunc_ = new_trunc;
  return *this;
}

FracSeries& FracSeries::operator-=(const FracSeries& other) { return *this += -other; }

FracSeries& FracSeries::operator*=(const Rational& scalar) {
  if (triality::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

FracSeries& FracSeries::operator*=(const FracSeries& other) {
  *this = *this * other;
  return *this;
}

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
  std::int64_t ta = a.trunc_, tb = b.trunc_;
  std::int64_t bound = std::min(ta + b.effective_valuation(), tb + a.effective_valuation());
  FracSeries out;
  out.trunc_ = clamp_trunc(bound);
  if (a.terms_.empty() || b.terms_.empty()) return out;

  const int lo = a.terms_.front().exponent + b.terms_.front().exponent;
  const int hi = std::min<std::int64_t>(
      out.trunc_, static_cast<std::int64_t>(a.terms_.back().exponent) + b.terms_.back().exponent + 1);
  if (hi <= lo) return out;

  const std::int64_t span = static_cast<std::int64_t>(hi) - lo;
  if (span <= (1 << 16)) {
    std::vector<Rational> acc(static_cast<std::size_t>(span));
    std::vector<char> touched(static_cast<std::size_t>(span), 0);
    Rational prod;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        int e = x.exponent + y.exponent;
        if (e >= hi) break;
        mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
        auto idx = static_cast<std::size_t>(e - lo);
        mpq_add(acc[idx].get_mpq_t(), acc[idx].get_mpq_t(), prod.get_mpq_t());
        touched[idx] = 1;
      }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (touched[i] && !triality::is_zero(acc[i])) {
        out.terms_.push_back({lo + static_cast<int>(i), std::move(acc[i])});
      }
    }
  } else {
    std::map<int, Rational> acc;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        int e = x.exponent + y.exponent;
        if (e >= hi) break;
        acc[e] += x.coeff * y.coeff;
      }
    }
    for (auto& [e, c] : acc) {
      if (!triality::is_zero(c)) out.terms_.push_back({e, std::move(c)});
    }
  }
  return out;
}

bool operator==(const FracSeries& a, const FracSeries& b) {
  int window = std::min(a.trunc_, b.trunc_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (true) {
    bool enda = ia == a.terms_.end() || ia->exponent >= window;
    bool endb = ib == b.terms_.end() || ib->exponent >= window;
    if (enda || endb) return enda && endb;
    if (ia->exponent != ib->exponent || ia->coeff != ib->coeff) return false;
    ++ia;
    ++ib;
  }
}

FracSeries FracSeries::pow(unsigned n) const {
  FracSeries result = constant(1);
  FracSeries base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool FracSeries::exponents_divisible_by(int step) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [step](const Term& t) { return t.exponent % step == 0; });
}

std::string FracSeries::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    std::string c = to_pretty_string(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    std::string mag = negative ? c.substr(1) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string q = q_power(t.exponent);
    if (q.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += q;
    } else {
      out += mag + "*" + q;
    }
  }
  if (!is_exact()) {
    out += out.empty() ? "" : " + ";
    std::string q = q_power(trunc_);
    out += "O(" + (q.empty() ? std::string("1") : q) + ")";
  }
  return out.empty() ? "0" : out;
}

FracSeries invert(const FracSeries& a) {
  if (a.is_zero()) throw ZeroSeries("cannot invert a series with no nonzero term below its truncation");
  const auto& terms = a.terms();
  const int v = terms.front().exponent;
  if (a.is_exact()) {
    if (terms.size() != 1) {
      throw std::domain_error("inverse of an exact multi-term series needs a truncation");
    }
    return FracSeries::monomial(-v, 1 / terms.front().coeff);
  }
  // Unit part u = a / (c t^v) = 1 + sum_k u_k t^k, known for k < precision.
  const int precision = a.trunc() - v;
  const Rational inv_lead = 1 / terms.front().coeff;
  std::vector<Rational> result(static_cast<std::size_t>(precision));
  result[0] = 1;
  std::vector<std::pair<int, Rational>> unit;  // (k, u_k) for k >= 1
  for (std::size_t i = 1; i < terms.size(); ++i) {
    unit.emplace_back(terms[i].exponent - v, terms[i].coeff * inv_lead);
  }
  Rational prod;
  for (int n = 1; n < precision; ++n) {
    Rational& r = result[static_cast<std::size_t>(n)];
    for (const auto& [k, uk] : unit) {
      if (k > n) break;
      const Rational& prev = result[static_cast<std::size_t>(n - k)];
      if (triality::is_zero(prev)) continue;
      mpq_mul(prod.get_mpq_t(), uk.get_mpq_t(), prev.get_mpq_t());
      mpq_sub(r.get_mpq_t(), r.get_mpq_t(), prod.get_mpq_t());
    }
  }
  std::vector<std::pair<int, Rational>> out;
  for (int n = 0; n < precision; ++n) {
    auto& r = result[static_cast<std::size_t>(n)];
    if (!triality::is_zero(r)) out.emplace_back(n - v, r * inv_lead);
  }
  return FracSeries::from_terms(std::move(out), precision - v);
}

}  // namespace triality
