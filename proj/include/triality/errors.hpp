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

#include <stdexcept>
#include <string>

namespace triality {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact_series
class ZeroSeries : public Error { using Error::Error; };
class UnsupportedLattice : public Error { using Error::Error; };

// weyl_poly / invariant_ring
class NotInvariant : public Error { using Error::Error; };
class HasPole : public Error { using Error::Error; };
class NoRepresentation : public Error { using Error::Error; };
class AmbiguousRepresentation : public Error { using Error::Error; };
class NotHomogeneous : public Error { using Error::Error; };

// covariants
class BadOrder : public Error { using Error::Error; };
class NegativeOrder : public Error { using Error::Error; };
class NotPolynomial : public Error { using Error::Error; };

// cli
class UnknownName : public Error { using Error::Error; };
class UnknownSuite : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace triality
