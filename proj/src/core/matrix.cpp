/*
 * Copyright 2026 The isodual Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "matrix.hpp"

#include "error.hpp"

namespace isodual::la {

Matrix Matrix::transposed() const {
  Matrix t(*f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::top_rows(std::size_t r) const {
  Matrix t(*f_, r, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), t.data_.begin());
  return t;
}

Matrix Matrix::stacked(const Matrix& o) const {
  if (o.cols_ != cols_) throw InvalidArgument("stacked: column count mismatch");
  Matrix t(*f_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), t.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), t.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return t;
}

std::vector<std::size_t> rref(Matrix& m) {
  const auto& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    const std::uint32_t inv = F.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const std::uint32_t factor = m.at(i, c);
      if (factor == 0) continue;
      const std::uint32_t nf = F.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(nf, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: dimension mismatch");
  const auto& F = a.field();
  Matrix r(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const std::uint32_t x = a.at(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(x, b.at(l, j)));
    }
  return r;
}

Matrix gram(const Matrix& a, const std::vector<std::uint32_t>& w, const Matrix& b) {
  if (a.cols() != b.cols() || w.size() != a.cols()) throw InvalidArgument("gram: dimension mismatch");
  const auto& F = a.field();
  Matrix r(F, a.rows(), b.rows());
  std::vector<std::uint32_t> scaled(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) scaled[l] = F.mul(a.at(i, l), w[l]);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      std::uint32_t acc = 0;
      const std::uint32_t* br = b.row(j);
      for (std::size_t l = 0; l < a.cols(); ++l) acc = F.add(acc, F.mul(scaled[l], br[l]));
      r.at(i, j) = acc;
    }
  }
  return r;
}

Matrix kernel(const Matrix& m) {
  Matrix e = m;
  const auto pivots = rref(e);
  const auto& F = m.field();
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix k(F, n - pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k.at(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k.at(row, pivots[i]) = F.neg(e.at(i, free));
    ++row;
  }
  rref(k);
  return k;
}

}  // namespace isodual::la
