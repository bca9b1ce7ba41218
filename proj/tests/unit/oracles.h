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

// Independent reference computations shared by the unit tests. None of
// these call into the box-filter path.

#ifndef HGF_TESTS_UNIT_ORACLES_H_
#define HGF_TESTS_UNIT_ORACLES_H_

#include <algorithm>
#include <random>
#include <vector>

#include "hgf/box_filter.h"
#include "hgf/image.h"
#include "hgf/linalg.h"

namespace hgf::testing {

// Double-loop window sum with explicit border clipping.
inline ImagePlane NaiveWindowSum(const ImagePlane& p, int r) {
  ImagePlane out(p.width(), p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < p.width(); ++x) {
      double s = 0.0;
      for (int qy = y - r; qy <= y + r; ++qy) {
        for (int qx = x - r; qx <= x + r; ++qx) {
          if (qx < 0 || qy < 0 || qx >= p.width() || qy >= p.height()) continue;
          s += p(qx, qy);
        }
      }
      out(x, y) = s;
    }
  }
  return out;
}

inline ImagePlane NaiveWindowDot(const ImagePlane& a, const ImagePlane& b,
                                 int r) {
  ImagePlane out(a.width(), a.height());
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      double s = 0.0;
      for (int qy = std::max(0, y - r); qy <= std::min(a.height() - 1, y + r); ++qy) {
        for (int qx = std::max(0, x - r); qx <= std::min(a.width() - 1, x + r); ++qx) {
          s += a(qx, qy) * b(qx, qy);
        }
      }
      out(x, y) = s;
    }
  }
  return out;
}

inline std::vector<std::vector<double>> RandomVectors(int count, int length,
                                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> v(count, std::vector<double>(length));
  for (auto& c : v) {
    for (auto& e : c) e = u(rng);
  }
  return v;
}

// Gram matrix of c_0 = ones followed by the given vectors.
inline DenseMatrix GramWithOnes(const std::vector<std::vector<double>>& c) {
  const int len = static_cast<int>(c.front().size());
  std::vector<std::vector<double>> all;
  all.emplace_back(len, 1.0);
  all.insert(all.end(), c.begin(), c.end());
  const int dim = static_cast<int>(all.size());
  DenseMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double s = 0.0;
      for (int k = 0; k < len; ++k) s += all[i][k] * all[j][k];
      g(i, j) = s;
    }
  }
  return g;
}

// || (lambda E + sum c_i c_i^T)(lambda^-1 E + sum alpha_ij c_i c_j^T) - E ||_F
// with c_0 = ones and c_1.. the given vectors.
inline double InverseResidual(const std::vector<std::vector<double>>& c,
                              const DenseMatrix& alpha, double lambda) {
  const int len = static_cast<int>(c.front().size());
  std::vector<std::vector<double>> all;
  all.emplace_back(len, 1.0);
  all.insert(all.end(), c.begin(), c.end());
  const int dim = static_cast<int>(all.size());
  DenseMatrix m = DenseMatrix::Identity(len);
  DenseMatrix inv = DenseMatrix::Identity(len);
  for (int r = 0; r < len; ++r) {
    for (int s = 0; s < len; ++s) {
      m(r, s) *= lambda;
      inv(r, s) /= lambda;
      for (int i = 0; i < dim; ++i) {
        m(r, s) += all[i][r] * all[i][s];
        for (int j = 0; j < dim; ++j) {
          inv(r, s) += alpha(i, j) * all[i][r] * all[j][s];
        }
      }
    }
  }
  return (m * inv - DenseMatrix::Identity(len)).FrobeniusNorm();
}

}  // namespace hgf::testing

#endif  // HGF_TESTS_UNIT_ORACLES_H_
