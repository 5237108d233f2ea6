// Copyright 2026 The motifmine Authors
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

#ifndef MOTIFMINE_MATRIX_HPP_
#define MOTIFMINE_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "motifmine/error.hpp"

namespace motifmine {

// Dense row-major matrix of doubles. Feature matrices are stored as
// (rows = bins, cols = frames).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  // Columns [c0, c1) as a new matrix with the same row count.
  Matrix col_slice(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_) throw ShapeError("col_slice out of range");
    Matrix out(rows_, c1 - c0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = c0; c < c1; ++c) out(r, c - c0) = (*this)(r, c);
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

}  // namespace motifmine

#endif  // MOTIFMINE_MATRIX_HPP_
