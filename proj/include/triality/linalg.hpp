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

#include <cstddef>
#include <optional>
#include <vector>

#include "triality/rational.hpp"

namespace triality {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a row; the length must match cols().
  void append_row(const std::vector<Rational>& row);
  std::vector<Rational> row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form plus pivot columns (one per nonzero row).
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(RationalMatrix m);

/// Basis of {x : M x = 0}, returned as the rows of a reduced row echelon
/// matrix (first nonzero entry of each vector is 1). Deterministic.
std::vector<std::vector<Rational>> rational_kernel(const RationalMatrix& m);

/// Solution of M x = b when it exists and is unique; std::nullopt when
/// inconsistent. `kernel_dim` (if given) receives dim ker M; when it is
/// positive the returned solution is the one with free variables set to 0.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b,
                                           std::size_t* kernel_dim = nullptr);

}  // namespace triality
