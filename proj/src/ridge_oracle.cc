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

#include "hgf/ridge_oracle.h"

#include <stdexcept>

#include "hgf/linalg.h"
#include "hgf/parallel.h"

namespace hgf {
namespace {

std::vector<double> SolveRidge(const WindowSamples& s, double lambda,
                               PixelCoord where) {
  const int n = static_cast<int>(s.guidance.size());
  const std::size_t len = s.input.size();
  // Column 0 is the constant channel.
  const auto col = [&](int i, std::size_t q) {
    return i == 0 ? 1.0 : s.guidance[i - 1][q];
  };
  DenseMatrix m(n + 1, n + 1);
  std::vector<double> rhs(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      double acc = 0.0;
      for (std::size_t q = 0; q < len; ++q) acc += col(i, q) * col(j, q);
      m(i, j) = acc;
    }
    m(i, i) += lambda;
    double acc = 0.0;
    for (std::size_t q = 0; q < len; ++q) acc += col(i, q) * s.input[q];
    rhs[i] = acc;
  }
  try {
    return SolveDense(std::move(m), std::move(rhs));
  } catch (const std::domain_error&) {
    throw NumericalDegeneracy("singular ridge system", where);
  }
}

void ValidateSamples(const WindowSamples& s) {
  if (s.input.empty()) throw InvalidArgument("ridge oracle: empty window");
  for (const auto& g : s.guidance) {
    if (g.size() != s.input.size()) {
      throw InvalidArgument("ridge oracle: ragged window samples");
    }
  }
}

}  // namespace

std::vector<double> RidgeOracle(const WindowSamples& samples, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("ridge oracle: lambda must be > 0");
  ValidateSamples(samples);
  return SolveRidge(samples, lambda, PixelCoord{0, 0});
}

WeightStack DirectRidgeCoefficients(const ImagePlane& input,
                                    const ChannelStack& guidance, double lambda,
                                    WindowSpec window) {
  if (!(lambda > 0.0)) throw InvalidArgument("ridge oracle: lambda must be > 0");
  if (!guidance.SameShape(input)) {
    throw InvalidArgument("direct ridge: dimension mismatch");
  }
  const int n = guidance.channels();
  const int w = input.width();
  const int h = input.height();
  std::vector<ImagePlane> planes(n + 1, ImagePlane(w, h));

  ParallelFor(h, [&](std::size_t lo, std::size_t hi) {
    WindowSamples s;
    s.guidance.resize(n);
    for (int y = static_cast<int>(lo); y < static_cast<int>(hi); ++y) {
      for (int x = 0; x < w; ++x) {
        const WindowBounds b = ClippedWindow(w, h, window, x, y);
        s.input.clear();
        for (auto& g : s.guidance) g.clear();
        for (int qy = b.y0; qy < b.y1; ++qy) {
          for (int qx = b.x0; qx < b.x1; ++qx) {
            s.input.push_back(input(qx, qy));
            for (int i = 0; i < n; ++i) s.guidance[i].push_back(guidance[i](qx, qy));
          }
        }
        const auto coef = SolveRidge(s, lambda, PixelCoord{x, y});
        for (int k = 0; k <= n; ++k) planes[k](x, y) = coef[k];
      }
    }
  });
  return WeightStack(std::move(planes));
}

ImagePlane NaiveAggregate(const WeightStack& weights,
                          const ChannelStack& guidance, WindowSpec window) {
  const int n = weights.channels();
  if (guidance.channels() != n || !guidance.SameShape(weights[0])) {
    throw InvalidArgument("naive aggregate: shape mismatch");
  }
  const int w = guidance.width();
  const int h = guidance.height();
  ImagePlane z(w, h);
  ParallelFor(h, [&](std::size_t lo, std::size_t hi) {
    for (int y = static_cast<int>(lo); y < static_cast<int>(hi); ++y) {
      for (int x = 0; x < w; ++x) {
        const WindowBounds b = ClippedWindow(w, h, window, x, y);
        double acc = 0.0;
        for (int py = b.y0; py < b.y1; ++py) {
          for (int px = b.x0; px < b.x1; ++px) {
            double model = weights[0](px, py);
            for (int i = 1; i <= n; ++i) {
              model += weights[i](px, py) * guidance[i - 1](x, y);
            }
            acc += model;
          }
        }
        z(x, y) = acc / b.count();
      }
    }
  });
  return z;
}

ImagePlane DirectRidgeFilter(const ImagePlane& input,
                             const ChannelStack& raw_guidance,
                             const FilterParams& params) {
  const double lambda = ValidateLambda(params.lambda);
  const ChannelStack guidance =
      SynthesizePolynomialGuidance(raw_guidance, params.poly);
  const WeightStack coef =
      DirectRidgeCoefficients(input, guidance, lambda, params.window);
  return NaiveAggregate(coef, guidance, params.window);
}

}  // namespace hgf
