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

// Reference ridge-regression filter: gathers every window explicitly and
// solves (lambda E + X^T X) w = X^T y with pivoted elimination. Shares no
// code with the box-filter path and serves as its ground truth.

#ifndef HGF_RIDGE_ORACLE_H_
#define HGF_RIDGE_ORACLE_H_

#include <vector>

#include "hgf/engine.h"

namespace hgf {

// Samples of one window: guidance[i] holds channel i+1 over the window,
// input the matching Y values. All vectors have the same non-zero length.
struct WindowSamples {
  std::vector<std::vector<double>> guidance;
  std::vector<double> input;
};

// Returns w(0..n) with w(0) the coefficient of the constant channel.
// Throws InvalidArgument for lambda <= 0 or an empty/ragged window and
// NumericalDegeneracy (at pixel (0,0)) if the system is singular.
std::vector<double> RidgeOracle(const WindowSamples& samples, double lambda);

// Per-pixel coefficients from RidgeOracle for every clipped window.
WeightStack DirectRidgeCoefficients(const ImagePlane& input,
                                    const ChannelStack& guidance, double lambda,
                                    WindowSpec window);

// Averages w_p over p in window(q) and evaluates the local model at q, one
// window at a time.
ImagePlane NaiveAggregate(const WeightStack& weights,
                          const ChannelStack& guidance, WindowSpec window);

// Synthesizes the polynomial guidance from raw_guidance, then
// DirectRidgeCoefficients + NaiveAggregate. Lambda is validated the same
// way as in HgfFilter.
ImagePlane DirectRidgeFilter(const ImagePlane& input,
                             const ChannelStack& raw_guidance,
                             const FilterParams& params);

}  // namespace hgf

#endif  // HGF_RIDGE_ORACLE_H_
