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

// Cost-volume labelling: build per-label cost slices, smooth each slice
// with a guided filter, pick the cheapest label per pixel.

#ifndef HGF_MULTILABEL_H_
#define HGF_MULTILABEL_H_

#include <optional>
#include <string>
#include <vector>

#include "hgf/engine.h"
#include "hgf/image.h"

namespace hgf {

// L >= 2 slices of equal size with finite values. Volumes built by
// BuildStereoCost / BuildSegmentationCost are also non-negative; filtered
// volumes may dip slightly below zero.
class CostVolume {
 public:
  explicit CostVolume(std::vector<ImagePlane> slices);

  int labels() const { return static_cast<int>(slices_.size()); }
  int width() const { return slices_.front().width(); }
  int height() const { return slices_.front().height(); }
  const ImagePlane& operator[](int l) const { return slices_[l]; }
  const std::vector<ImagePlane>& slices() const { return slices_; }

  friend bool operator==(const CostVolume&, const CostVolume&) = default;

 private:
  std::vector<ImagePlane> slices_;
};

class LabelMap {
 public:
  LabelMap(int width, int height, int label_count, std::vector<int> labels);

  int width() const { return width_; }
  int height() const { return height_; }
  int label_count() const { return label_count_; }
  int operator()(int x, int y) const {
    return labels_[static_cast<std::size_t>(y) * width_ + x];
  }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  int width_;
  int height_;
  int label_count_;
  std::vector<int> labels_;
};

struct DisparityTruth {
  ImagePlane disparity;
  std::vector<bool> valid;  // row-major, true = evaluated (non-occluded)
};

struct StereoCostParams {
  double alpha = 0.11;       // weight of the color term
  double tau_color = 0.028;  // truncation of mean absolute color difference
  double tau_grad = 0.008;   // truncation of absolute x-gradient difference
};

// Slice d (0 <= d <= dmax) compares left(x, y) with right(x - d, y):
//   alpha * min(mean_c |L_c - R_c|, tau_color)
//     + (1 - alpha) * min(|dL/dx - dR/dx|, tau_grad)
// on the channel-mean image's central-difference x-gradient. Matches that
// fall outside the right image cost alpha*tau_color + (1-alpha)*tau_grad.
CostVolume BuildStereoCost(const ChannelStack& left, const ChannelStack& right,
                           int dmax, const StereoCostParams& params = {});

inline constexpr int kHistogramBins = 32;
inline constexpr int kBackgroundLabel = 0;
inline constexpr int kForegroundLabel = 1;

// Two slices (background, foreground). Each seed set yields per-channel
// 32-bin histograms with +1 Laplace smoothing; a pixel's cost is
// -sum_c log p_c(bin), divided by its largest possible value
// m * log(N + 32) so the slice lies in [0, 1].
CostVolume BuildSegmentationCost(const ChannelStack& image,
                                 const std::vector<PixelCoord>& fg_seeds,
                                 const std::vector<PixelCoord>& bg_seeds);

enum class AggregationMethod { kNone, kBox, kGf, kHgf };
AggregationMethod ParseAggregationMethod(const std::string& name);

// Filters every slice independently against `guidance`. kBox ignores the
// guidance; kGf uses the raw guidance (1 or 3 channels) with eps = lambda;
// kHgf synthesizes the polynomial guidance per params.poly.
CostVolume FilterVolume(const CostVolume& volume, const ChannelStack& guidance,
                        const FilterParams& params, AggregationMethod method);

// Per-pixel argmin; ties go to the lowest label.
LabelMap WinnerTakesAll(const CostVolume& volume);

// Fraction of valid pixels with |label - truth| > threshold. Throws
// InvalidArgument if no pixel is valid or shapes differ.
double BadPixelFraction(const LabelMap& labels, const DisparityTruth& truth,
                        double threshold = 1.0);

// Ground truth stored as 8-bit PGM: disparity = byte / scale. A mask PGM
// marks evaluated pixels with 255; without one every pixel is evaluated.
DisparityTruth LoadDisparityTruth(const std::string& truth_path, double scale,
                                  const std::optional<std::string>& mask_path);
void SaveDisparityTruth(const DisparityTruth& truth, const std::string& path,
                        double scale, const std::optional<std::string>& mask_path);

// Writes byte = clamp(round(label * scale), 0, 255) as PGM.
void SaveLabelMap(const LabelMap& labels, const std::string& path,
                  double scale);

// Plain-text seeds: one "x y" pair per line; blank lines and lines starting
// with '#' are ignored.
std::vector<PixelCoord> LoadSeeds(const std::string& path);
void SaveSeeds(const std::vector<PixelCoord>& seeds, const std::string& path);

}  // namespace hgf

#endif  // HGF_MULTILABEL_H_
