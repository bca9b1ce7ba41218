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

// Hardware-efficient guided filter.
//
// Per pixel p the filter fits a ridge regression of the input Y on the
// guidance channels G_1..G_n plus a constant channel G_0 = 1 over the
// window around p:
//
//   w_p = argmin  lambda |w|^2 + sum_q (Y(q) - w(0) - sum_i w(i) G_i(q))^2
//
// The inverse (lambda E + sum_i c_i c_i^T)^-1 over window-space vectors c_i
// is expanded as lambda^-1 E + sum_ij alpha_ij c_i c_j^T. The alpha_ij
// follow from repeated rank-one (Sherman-Morrison) updates that only need
// the inner products G_ij = c_i^T c_j, and G_ij is a box sum of the product
// plane G_i * G_j. The whole filter is therefore box filters plus
// element-wise arithmetic; no per-pixel matrix is ever factorized.
//
// Two printed coefficients are corrected here and checked against a dense
// inverse in the test suite:
//   * initial term: alpha_00 = -lambda^-1 / (lambda + G_00), the rank-one
//     update of lambda E + c_0 c_0^T (only equal to -(lambda + G_00)^-1 at
//     lambda = 1);
//   * the i,j < k update carries the gamma factor: alpha_ij += gamma F_ij.

#ifndef HGF_ENGINE_H_
#define HGF_ENGINE_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "hgf/box_filter.h"
#include "hgf/guidance.h"
#include "hgf/image.h"
#include "hgf/linalg.h"

namespace hgf {

struct FilterParams {
  static constexpr double kMinLambda = 1e-6;
  static constexpr double kDefaultLambda = 0.05;
  static constexpr int kDefaultRadius = 7;

  double lambda = kDefaultLambda;
  WindowSpec window{kDefaultRadius};
  PolynomialSpec poly{PolynomialSpec::kDefaultDegree};

  // Validates and clamps lambda up to kMinLambda. Throws InvalidArgument for
  // lambda <= 0 or non-finite, radius < 1 or degree < 1.
  static FilterParams Make(double lambda, int radius, int degree);
};

// Throws InvalidArgument for lambda <= 0 or non-finite; otherwise
// max(lambda, kMinLambda).
double ValidateLambda(double lambda);

// Upper-triangular storage for a symmetric table of planes indexed
// 0 <= i, j < dim.
class SymmetricPlanes {
 public:
  SymmetricPlanes() = default;
  SymmetricPlanes(int dim, std::vector<ImagePlane> packed);

  static std::size_t PackedSize(int dim) {
    return static_cast<std::size_t>(dim) * (dim + 1) / 2;
  }
  static std::size_t PackedIndex(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
  }

  int dim() const { return dim_; }
  int width() const { return planes_.front().width(); }
  int height() const { return planes_.front().height(); }
  const ImagePlane& at(int i, int j) const;
  const std::vector<ImagePlane>& packed() const { return planes_; }

 private:
  int dim_ = 0;
  std::vector<ImagePlane> planes_;
};

// G_ij = box_sum(G_i * G_j) for 0 <= i <= j <= n+1. Index 0 is the implicit
// ones channel, 1..n the guidance, n+1 the input Y.
class GramTable {
 public:
  GramTable(int n, std::vector<ImagePlane> packed);

  int channels() const { return planes_.dim() - 2; }
  int width() const { return planes_.width(); }
  int height() const { return planes_.height(); }
  const ImagePlane& at(int i, int j) const { return planes_.at(i, j); }
  const SymmetricPlanes& planes() const { return planes_; }

 private:
  SymmetricPlanes planes_;
};

// Packed alpha_ij planes for 0 <= i, j <= stage.
class AlphaTable {
 public:
  AlphaTable(int channels, int stage, std::vector<ImagePlane> packed);

  int channels() const { return channels_; }
  int stage() const { return planes_.dim() - 1; }
  const ImagePlane& at(int i, int j) const { return planes_.at(i, j); }
  const SymmetricPlanes& planes() const { return planes_; }

 private:
  int channels_;
  SymmetricPlanes planes_;
};

// W_0..W_n: per-pixel ridge coefficients (W_0 multiplies the ones channel).
class WeightStack {
 public:
  explicit WeightStack(std::vector<ImagePlane> planes);
  int channels() const { return static_cast<int>(planes_.size()) - 1; }
  const ImagePlane& operator[](int k) const { return planes_[k]; }
  const std::vector<ImagePlane>& planes() const { return planes_; }

 private:
  std::vector<ImagePlane> planes_;
};

GramTable ComputeGram(const ChannelStack& guidance, const ImagePlane& input,
                      WindowSpec window);

// alpha_00 = -lambda^-1 / (lambda + G_00).
AlphaTable AlphaInit(const GramTable& gram, double lambda);

// One rank-one update adding channel kappa (1 <= kappa <= n). With
// u_i = sum_{m<kappa} alpha_im G_{m,kappa}:
//   gamma       = -1 / (1 + G_kk / lambda + sum_m G_{k,m} u_m)
//   alpha_ij   += gamma u_i u_j           (i, j < kappa)
//   alpha_i,k   = gamma u_i / lambda
//   alpha_k,k   = gamma / lambda^2
// Returns fresh planes. Throws NumericalDegeneracy (first pixel in
// row-major order) when |gamma denominator| < 1e-12.
AlphaTable AlphaStep(const AlphaTable& alpha, const GramTable& gram,
                     double lambda, int kappa);

// W_k = G_{k,n+1} / lambda + sum_ij alpha_ij G_ki G_{j,n+1}, 0 <= k <= n.
// Requires alpha at stage n.
WeightStack ComputeWeights(const AlphaTable& alpha, const GramTable& gram,
                           double lambda);

// Z = sum_{i=1..n} box_average(W_i) * G_i + box_average(W_0).
ImagePlane Aggregate(const WeightStack& weights, const ChannelStack& guidance,
                     WindowSpec window);

struct StageTimes {
  double gram_ms = 0.0;
  double alpha_ms = 0.0;
  double weights_ms = 0.0;
  double aggregate_ms = 0.0;
  double total_ms = 0.0;
};

struct FilterResult {
  ImagePlane output;
  StageTimes times;
};

// Runs the pipeline on an already synthesized guidance G_1..G_n.
FilterResult HgfFilterSynthesized(const ImagePlane& input,
                                  const ChannelStack& guidance, double lambda,
                                  WindowSpec window);

// Polynomial guidance synthesis followed by HgfFilterSynthesized. Guidance
// synthesis time is attributed to the gram stage.
FilterResult HgfFilterTimed(const ImagePlane& input,
                            const ChannelStack& raw_guidance,
                            const FilterParams& params);

ImagePlane HgfFilter(const ImagePlane& input, const ChannelStack& raw_guidance,
                     const FilterParams& params);

// Everything in the pipeline that depends only on the guidance: the Gram
// planes among G_0..G_n and the finished alpha table. Filtering many inputs
// against one guidance (cost-volume slices) then costs n+2 box sums for the
// G_{k,n+1} column plus weights and aggregation. Output is bit-identical to
// HgfFilterSynthesized.
class PreparedGuidance {
 public:
  PreparedGuidance(ChannelStack guidance, double lambda, WindowSpec window);

  ImagePlane Filter(const ImagePlane& input) const;

  const ChannelStack& guidance() const { return guidance_; }
  double lambda() const { return lambda_; }
  WindowSpec window() const { return window_; }

 private:
  ChannelStack guidance_;
  double lambda_;
  WindowSpec window_;
  std::vector<ImagePlane> guidance_gram_;  // packed, dim n+1
  AlphaTable alpha_;
};

// Literal per-pixel evaluation of the recursion for one Gram matrix
// (dim >= n+1, entries (i, j) for 0 <= i, j <= n), computing F_ij as the
// double sum and both halves of alpha independently. Used to verify the
// factored, packed plane form and the symmetry of alpha.
DenseMatrix AlphaRecursionReference(const DenseMatrix& gram, int n,
                                    double lambda);

}  // namespace hgf

#endif  // HGF_ENGINE_H_
