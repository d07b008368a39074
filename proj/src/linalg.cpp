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

#include "gkcodes/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace gkcodes {

std::vector<Fe> Matrix::row(std::size_t r) const {
  if (r >= rows_) throw Error("matrix row out of range");
  return std::vector<Fe>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const std::vector<Fe>& v) {
  if (r >= rows_ || v.size() != cols_) throw Error("matrix row shape mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::append_row(const std::vector<Fe>& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error("matrix row shape mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Echelon rref(const FieldTower& f, const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == Fe{0}) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(piv, k), a.at(r, k));
    }
    const Fe inv = f.inv(a.at(r, c));
    for (std::size_t k = c; k < a.cols(); ++k) a.at(r, k) = f.mul(a.at(r, k), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == Fe{0}) continue;
      const Fe factor = a.at(i, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        a.at(i, k) = f.sub(a.at(i, k), f.mul(factor, a.at(r, k)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.reduced = Matrix(r, a.cols());
  for (std::size_t i = 0; i < r; ++i) e.reduced.set_row(i, a.row(i));
  e.pivots = std::move(pivots);
  return e;
}

std::size_t rank(const FieldTower& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Matrix nullspace(const FieldTower& f, const Matrix& m) {
  const Echelon e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  Matrix out(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fe> v(m.cols(), Fe{0});
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
    out.append_row(v);
  }
  return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("stack: column counts differ");
  Matrix out(0, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

bool same_row_space(const FieldTower& f, const Matrix& a, const Matrix& b) {
  const std::size_t ra = rank(f, a);
  return ra == rank(f, b) && ra == rank(f, stack(a, b));
}

std::vector<Fe> IncrementalBasis::reduce(std::vector<Fe> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Fe c = v[pivots_[i]];
    if (c == Fe{0}) continue;
    for (std::size_t k = 0; k < dim_; ++k) v[k] = f_.sub(v[k], f_.mul(c, rows_[i][k]));
  }
  return v;
}

bool IncrementalBasis::contains(const std::vector<Fe>& v) const {
  if (v.size() != dim_) throw Error("IncrementalBasis: dimension mismatch");
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Fe x) { return x == Fe{0}; });
}

bool IncrementalBasis::try_add(const std::vector<Fe>& v) {
  if (v.size() != dim_) throw Error("IncrementalBasis: dimension mismatch");
  auto r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv] == Fe{0}) ++piv;
  if (piv == dim_) return false;
  const Fe inv = f_.inv(r[piv]);
  for (auto& x : r) x = f_.mul(x, inv);
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    const Fe c = row[piv];
    if (c == Fe{0}) continue;
    for (std::size_t k = 0; k < dim_; ++k) row[k] = f_.sub(row[k], f_.mul(c, r[k]));
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gkcodes
