// Copyright 2026 The vknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "vknot/laurent.hpp"

namespace vknot {

/// Dense row-major matrix over Z[s^+-1, t^+-1].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  PolyMatrix transposed() const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  void swap_rows(std::size_t a, std::size_t b);

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

/**
 * Exact determinant. Unit entries are used as pivots first (plain Gaussian
 * steps, exact because the pivot is invertible); whatever block remains is
 * finished with fraction-free Bareiss elimination on rows pre-scaled to honest
 * polynomials. The 0x0 determinant is 1. Throws NotSquare.
 */
LaurentPoly det(const PolyMatrix& m);

/// All k x k minors, row subsets outer and column subsets inner, both in
/// lexicographic order. k = 0 yields {1}. Throws SizeTooLarge.
std::vector<LaurentPoly> minors(const PolyMatrix& m, std::size_t k, bool parallel = true);

}  // namespace vknot
