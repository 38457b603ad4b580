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

#pragma once

#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace isodual::la {

/// Dense row-major matrix of field encodings.
class Matrix {
 public:
  Matrix(const gf::Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const gf::Field& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  Matrix transposed() const;
  /// Rows [0, r).
  Matrix top_rows(std::size_t r) const;
  /// this stacked over o.
  Matrix stacked(const Matrix& o) const;

  bool operator==(const Matrix& o) const {
    return f_->same_as(*o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  const gf::Field* f_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

/// In-place reduced row echelon form; returns the pivot columns (rank = size).
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// A * B.
Matrix multiply(const Matrix& a, const Matrix& b);
/// A * diag(w) * B^T, used for hull computations.
Matrix gram(const Matrix& a, const std::vector<std::uint32_t>& w, const Matrix& b);
/// Basis (as rows) of {v : m v^T = 0}, in RREF.
Matrix kernel(const Matrix& m);

}  // namespace isodual::la
