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

#include "vknot/poly_matrix.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "vknot/error.hpp"
#include "vknot/parallel.hpp"

namespace vknot {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("PolyMatrix: entry count does not match shape");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const {
  PolyMatrix r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
  return r;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

namespace {

void swap_cols(PolyMatrix& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
}

// Bareiss on the trailing block a[k0.., k0..]; returns its determinant.
LaurentPoly bareiss_block(PolyMatrix& a, std::size_t k0) {
  const std::size_t n = a.rows();
  if (k0 == n) return 1;

  // Scale each row of the block to an honest polynomial and remember the units.
  LaurentPoly scale = 1;
  for (std::size_t i = k0; i < n; ++i) {
    int ms = 0, mt = 0;
    bool any = false;
    for (std::size_t j = k0; j < n; ++j) {
      const LaurentPoly& e = a(i, j);
      if (e.is_zero()) continue;
      ms = any ? std::min(ms, e.min_s()) : e.min_s();
      mt = any ? std::min(mt, e.min_t()) : e.min_t();
      any = true;
    }
    if (!any) return {};
    if (ms != 0 || mt != 0) {
      for (std::size_t j = k0; j < n; ++j) a(i, j) = a(i, j).shifted(-ms, -mt);
      scale *= LaurentPoly::monomial(1, ms, mt);
    }
  }

  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = k0; k + 1 < n; ++k) {
    // Pivot: the nonzero entry of column k with the fewest terms.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, k).is_zero() && (piv == n || a(i, k).size() < a(piv, k).size())) piv = i;
    if (piv == n) return {};
    if (piv != k) {
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j);
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) v -= a(i, k) * a(k, j);
        a(i, j) = prev == 1 ? std::move(v) : exact_div(v, prev);
      }
      a(i, k) = LaurentPoly{};
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1) * scale;
  return sign < 0 ? -d : d;
}

}  // namespace

LaurentPoly det(const PolyMatrix& m) {
  if (!m.is_square())
    throw NotSquare("det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  PolyMatrix a = m;
  LaurentPoly factor = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    // Look for a unit pivot in the trailing block.
    std::size_t pr = n, pc = n;
    for (std::size_t i = k; i < n && pr == n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (a(i, j).is_unit()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) break;
    if (pr != k) {
      a.swap_rows(pr, k);
      factor = -factor;
    }
    if (pc != k) {
      swap_cols(a, pc, k);
      factor = -factor;
    }
    const LaurentPoly inv = a(k, k).unit_inverse();
    factor *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const LaurentPoly mult = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= mult * a(k, j);
      a(i, k) = LaurentPoly{};
    }
  }
  return factor * bareiss_block(a, k);
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  do out.push_back(c);
  while (next_combination(c, n));
  return out;
}

}  // namespace

std::vector<LaurentPoly> minors(const PolyMatrix& m, std::size_t k, bool parallel) {
  if (k > std::min(m.rows(), m.cols()))
    throw SizeTooLarge("minors: k=" + std::to_string(k) + " exceeds matrix size " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (k == 0) return {LaurentPoly(1)};
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  const std::size_t total = row_sets.size() * col_sets.size();
  return parallel_map(
      total,
      [&](std::size_t idx) {
        const auto& rs = row_sets[idx / col_sets.size()];
        const auto& cs = col_sets[idx % col_sets.size()];
        return det(m.submatrix(rs, cs));
      },
      parallel ? default_thread_count() : 1);
}

}  // namespace vknot
