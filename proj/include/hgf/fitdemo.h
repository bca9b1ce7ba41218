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

// One-dimensional illustration of linear versus polynomial local models:
// a smooth bump sampled at evenly spaced points, every fifth sample hit by
// strong noise, fitted by ridge regression on [1, x] and on [1, x, .., x^D].

#ifndef HGF_FITDEMO_H_
#define HGF_FITDEMO_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hgf {

struct FitDemoConfig {
  int degree = 2;
  std::uint64_t seed = 1;
  int points = 100;
  double noise_sigma = 0.2;   // applied to every fifth sample
  double lambda = 1e-8;
  bool linear_truth = false;  // sample 0.2 + 0.6 x without noise instead
};

struct FitDemoResult {
  std::vector<double> x;
  std::vector<double> clean;
  std::vector<double> noisy;
  std::vector<double> linear_fit;
  std::vector<double> poly_fit;
  double rms_linear = 0.0;  // against the clean curve
  double rms_poly = 0.0;
};

// Ridge fit of y on the features 1, x, .., x^degree; returns fitted values.
std::vector<double> FitPolynomial(const std::vector<double>& x,
                                  const std::vector<double>& y, int degree,
                                  double lambda);

// Throws InvalidArgument for degree < 1 or fewer than 2 points.
FitDemoResult RunFitDemo(const FitDemoConfig& config);

// Columns: x,clean,noisy,linear,poly.
void WriteFitCsv(const FitDemoResult& result, std::ostream& out);

}  // namespace hgf

#endif  // HGF_FITDEMO_H_
