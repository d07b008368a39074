// Copyright 2026 The gkcodes Authors.
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

#ifndef GKCODES_LINALG_HPP
#define GKCODES_LINALG_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "gkcodes/field_tower.hpp"

namespace gkcodes {

/// Dense row-major matrix over the tower field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Fe> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Fe>& v);
  void append_row(const std::vector<Fe>& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

struct Echelon {
  Matrix reduced;                   // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // pivot column per row
};

/// Reduced row echelon form.
Echelon rref(const FieldTower& f, const Matrix& m);
std::size_t rank(const FieldTower& f, const Matrix& m);
/// Rows spanning {v : M v^T = 0}.
Matrix nullspace(const FieldTower& f, const Matrix& m);
/// Vertical concatenation; column counts must agree.
Matrix stack(const Matrix& a, const Matrix& b);
bool same_row_space(const FieldTower& f, const Matrix& a, const Matrix& b);

/// Row basis grown one vector at a time.
class IncrementalBasis {
 public:
  IncrementalBasis(const FieldTower& f, std::size_t dim) : f_(f), dim_(dim) {}

  /// Adds v if it is independent of the rows kept so far.
  bool try_add(const std::vector<Fe>& v);
  bool contains(const std::vector<Fe>& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Fe> reduce(std::vector<Fe> v) const;

  const FieldTower& f_;
  std::size_t dim_;
  std::vector<std::vector<Fe>> rows_;  // pivot entry 1
  std::vector<std::size_t> pivots_;
};

/// Runs body(i) for i in [0, n) on up to `threads` workers. Each index is
/// processed exactly once; output order is the caller's responsibility.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace gkcodes

#endif  // GKCODES_LINALG_HPP
