// Copyright 2026 The HGF Authors.
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

// Small dense matrices and Gaussian elimination with partial pivoting.
// Used only by the reference paths (ridge oracle, naive guided filter,
// 1-D fitting); the fast filter never factorizes a matrix.

#ifndef HGF_LINALG_H_
#define HGF_LINALG_H_

#include <cstddef>
#include <span>
#include <vector>

namespace hgf {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}
  static DenseMatrix Identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return data_[r * cols_ + c]; }
  double& operator()(int r, int c) { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  double FrobeniusNorm() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Solves a x = b for square a. Throws std::domain_error when a pivot is
// exactly zero.
std::vector<double> SolveDense(DenseMatrix a, std::vector<double> b);

// Explicit inverse by Gauss-Jordan elimination with partial pivoting.
DenseMatrix InvertDense(DenseMatrix a);

}  // namespace hgf

#endif  // HGF_LINALG_H_
