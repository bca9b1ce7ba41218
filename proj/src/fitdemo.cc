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

#include "hgf/fitdemo.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "hgf/error.h"
#include "hgf/ridge_oracle.h"

namespace hgf {
namespace {

double Rms(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / a.size());
}

double Bump(double x) {
  const double t = (x - 0.5) / 0.2;
  return 0.2 + 0.6 * std::exp(-t * t);
}

}  // namespace

std::vector<double> FitPolynomial(const std::vector<double>& x,
                                  const std::vector<double>& y, int degree,
                                  double lambda) {
  if (degree < 1) throw InvalidArgument("fit degree must be >= 1");
  WindowSamples s;
  s.input = y;
  s.guidance.assign(degree, std::vector<double>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    double p = 1.0;
    for (int j = 0; j < degree; ++j) {
      p *= x[k];
      s.guidance[j][k] = p;
    }
  }
  const std::vector<double> w = RidgeOracle(s, lambda);
  std::vector<double> fit(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    double v = w[0];
    for (int j = 0; j < degree; ++j) v += w[j + 1] * s.guidance[j][k];
    fit[k] = v;
  }
  return fit;
}

FitDemoResult RunFitDemo(const FitDemoConfig& config) {
  if (config.degree < 1) throw InvalidArgument("degree must be >= 1");
  if (config.points < 2) throw InvalidArgument("need at least 2 points");
  FitDemoResult r;
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> noise(0.0, config.noise_sigma);
  for (int i = 0; i < config.points; ++i) {
    const double x = static_cast<double>(i) / (config.points - 1);
    const double y = config.linear_truth ? 0.2 + 0.6 * x : Bump(x);
    r.x.push_back(x);
    r.clean.push_back(y);
    const bool hit = !config.linear_truth && i % 5 == 4;
    r.noisy.push_back(hit ? y + noise(rng) : y);
  }
  r.linear_fit = FitPolynomial(r.x, r.noisy, 1, config.lambda);
  r.poly_fit = FitPolynomial(r.x, r.noisy, config.degree, config.lambda);
  r.rms_linear = Rms(r.linear_fit, r.clean);
  r.rms_poly = Rms(r.poly_fit, r.clean);
  return r;
}

void WriteFitCsv(const FitDemoResult& result, std::ostream& out) {
  out << "x,clean,noisy,linear,poly\n" << std::setprecision(17);
  for (std::size_t i = 0; i < result.x.size(); ++i) {
    out << result.x[i] << ',' << result.clean[i] << ',' << result.noisy[i]
        << ',' << result.linear_fit[i] << ',' << result.poly_fit[i] << '\n';
  }
}

}  // namespace hgf
