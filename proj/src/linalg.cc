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

#include "hgf/linalg.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hgf {
namespace {

void RequireSquare(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
}

int PivotRow(const DenseMatrix& a, int col) {
  int best = col;
  for (int r = col + 1; r < a.rows(); ++r) {
    if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
  }
  if (a(best, col) == 0.0) throw std::domain_error("singular matrix");
  return best;
}

void SwapRows(DenseMatrix& a, int r0, int r1) {
  if (r0 == r1) return;
  for (int c = 0; c < a.cols(); ++c) std::swap(a(r0, c), a(r1, c));
}

}  // namespace

DenseMatrix DenseMatrix::Identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("shape mismatch");
  }
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("shape mismatch");
  }
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

double DenseMatrix::FrobeniusNorm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

std::vector<double> SolveDense(DenseMatrix a, std::vector<double> b) {
  RequireSquare(a);
  const int n = a.rows();
  if (static_cast<int>(b.size()) != n) {
    throw std::invalid_argument("rhs length mismatch");
  }
  for (int col = 0; col < n; ++col) {
    const int p = PivotRow(a, col);
    SwapRows(a, col, p);
    std::swap(b[col], b[p]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
    x[r] = s / a(r, r);
  }
  return x;
}

DenseMatrix InvertDense(DenseMatrix a) {
  RequireSquare(a);
  const int n = a.rows();
  DenseMatrix inv = DenseMatrix::Identity(n);
  for (int col = 0; col < n; ++col) {
    const int p = PivotRow(a, col);
    SwapRows(a, col, p);
    SwapRows(inv, col, p);
    const double d = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace hgf
