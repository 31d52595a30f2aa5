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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace triality {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator) by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den" form used by every serializer. Integers keep the "/1".
std::string to_fraction_string(const Rational& x);

/// Human-readable form: "3", "-1/2".
std::string to_pretty_string(const Rational& x);

/// Parses "n", "-n" or "n/d". Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace triality
