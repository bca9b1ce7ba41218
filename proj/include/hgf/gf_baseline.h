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

// Classical guided filter. Unlike the HGF cost, the intercept w(0) is not
// regularized:
//
//   min  eps sum_{i>=1} w(i)^2 + sum_q (Y(q) - w(0) - sum_i w(i) I_i(q))^2
//
// Centering every window removes w(0) from the system; the slopes solve
// (eps E + X'^T X') w = X'^T y' and w(0) = mean(y) - w . mean(x).

#ifndef HGF_GF_BASELINE_H_
#define HGF_GF_BASELINE_H_

#include "hgf/engine.h"

namespace hgf {

// Per-pixel window means and centered Gram planes. The centered table is a
// GramTable over n-1 "channels": index a < n is guidance channel a+1,
// index n is Y.
struct CenteredStats {
  std::vector<ImagePlane> channel_means;  // n planes
  ImagePlane input_mean;
  GramTable centered;
};

CenteredStats ComputeCenteredStats(const ChannelStack& guidance,
                                   const ImagePlane& input, WindowSpec window);

// Gray (1 channel) or color (3 channel) guided filter. Throws
// InvalidArgument for other channel counts or eps <= 0.
ImagePlane GfFilter(const ImagePlane& input, const ChannelStack& guidance,
                    int radius, double eps);

// Same output computed with explicit per-pixel window statistics and a
// Gauss-Jordan inverse per pixel. Speed baseline only.
ImagePlane NaiveGfFilter(const ImagePlane& input, const ChannelStack& guidance,
                         int radius, double eps);

// Any channel count >= 1; used by the benchmark harness. Stage times map to
// statistics (gram), inversion (alpha), coefficients (weights), averaging
// (aggregate).
FilterResult GfFilterTimed(const ImagePlane& input,
                           const ChannelStack& guidance, WindowSpec window,
                           double eps);
FilterResult NaiveGfFilterTimed(const ImagePlane& input,
                                const ChannelStack& guidance, WindowSpec window,
                                double eps);

}  // namespace hgf

#endif  // HGF_GF_BASELINE_H_
