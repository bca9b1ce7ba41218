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

#include "hgf/gf_baseline.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

#include "hgf/linalg.h"
#include "hgf/parallel.h"
#include "hgf/ridge_oracle.h"

namespace hgf {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

void RequireGrayOrColor(const ChannelStack& guidance) {
  const int n = guidance.channels();
  if (n != 1 && n != 3) {
    throw InvalidArgument("guided filter supports 1 or 3 guidance channels, got " +
                          std::to_string(n));
  }
}

void RequireShapes(const ImagePlane& input, const ChannelStack& guidance) {
  if (!guidance.SameShape(input)) {
    throw InvalidArgument("guided filter: dimension mismatch");
  }
}

// w(0) = mean(y) - sum_i w(i) mean(x_i), then box-average every coefficient
// and evaluate at each pixel.
ImagePlane FinishFromSlopes(const std::vector<ImagePlane>& slopes,
                            const std::vector<ImagePlane>& means,
                            const ImagePlane& input_mean,
                            const ChannelStack& guidance, WindowSpec window,
                            StageTimes& times) {
  const int n = guidance.channels();
  auto t = Clock::now();
  ImagePlane intercept = input_mean;
  for (std::size_t k = 0; k < intercept.size(); ++k) {
    double v = input_mean[k];
    for (int i = 0; i < n; ++i) v -= slopes[i][k] * means[i][k];
    intercept[k] = v;
  }
  std::vector<ImagePlane> coef;
  coef.push_back(std::move(intercept));
  coef.insert(coef.end(), slopes.begin(), slopes.end());
  const WeightStack weights(std::move(coef));
  times.weights_ms += ElapsedMs(t);

  t = Clock::now();
  ImagePlane z = Aggregate(weights, guidance, window);
  times.aggregate_ms = ElapsedMs(t);
  return z;
}

}  // namespace

CenteredStats ComputeCenteredStats(const ChannelStack& guidance,
                                   const ImagePlane& input, WindowSpec window) {
  RequireShapes(input, guidance);
  const int n = guidance.channels();
  const GramTable gram = ComputeGram(guidance, input, window);
  const ImagePlane& count = gram.at(0, 0);

  std::vector<ImagePlane> means;
  for (int i = 1; i <= n; ++i) means.push_back(Div(gram.at(0, i), count));
  ImagePlane input_mean = Div(gram.at(0, n + 1), count);

  // Centered index a maps to raw index a+1 (Y is raw n+1, centered n).
  std::vector<std::pair<int, int>> pairs;
  for (int b = 0; b <= n; ++b) {
    for (int a = 0; a <= b; ++a) pairs.emplace_back(a, b);
  }
  std::vector<ImagePlane> packed(pairs.size());
  ParallelFor(pairs.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      const auto [a, b] = pairs[p];
      const ImagePlane& gab = gram.at(a + 1, b + 1);
      const ImagePlane& ga = gram.at(0, a + 1);
      const ImagePlane& gb = gram.at(0, b + 1);
      ImagePlane c(gab.width(), gab.height());
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = gab[k] - ga[k] * gb[k] / count[k];
      }
      packed[SymmetricPlanes::PackedIndex(a, b)] = std::move(c);
    }
  });
  return CenteredStats{std::move(means), std::move(input_mean),
                       GramTable(n - 1, std::move(packed))};
}

FilterResult GfFilterTimed(const ImagePlane& input,
                           const ChannelStack& guidance, WindowSpec window,
                           double eps) {
  eps = ValidateLambda(eps);
  RequireShapes(input, guidance);
  const int n = guidance.channels();
  FilterResult result;
  const auto start = Clock::now();

  auto t = Clock::now();
  const CenteredStats stats = ComputeCenteredStats(guidance, input, window);
  result.times.gram_ms = ElapsedMs(t);

  t = Clock::now();
  AlphaTable alpha = AlphaInit(stats.centered, eps);
  for (int kappa = 1; kappa < n; ++kappa) {
    alpha = AlphaStep(alpha, stats.centered, eps, kappa);
  }
  result.times.alpha_ms = ElapsedMs(t);

  t = Clock::now();
  const WeightStack slopes = ComputeWeights(alpha, stats.centered, eps);
  result.times.weights_ms = ElapsedMs(t);

  result.output = FinishFromSlopes(slopes.planes(), stats.channel_means,
                                   stats.input_mean, guidance, window,
                                   result.times);
  result.times.total_ms = ElapsedMs(start);
  return result;
}

FilterResult NaiveGfFilterTimed(const ImagePlane& input,
                                const ChannelStack& guidance, WindowSpec window,
                                double eps) {
  eps = ValidateLambda(eps);
  RequireShapes(input, guidance);
  const int n = guidance.channels();
  const int w = input.width();
  const int h = input.height();
  const std::size_t pixels = input.size();
  FilterResult result;
  const auto start = Clock::now();

  // Pass 1: window means, centered covariance (+ eps on the diagonal) and
  // centered cross terms, accumulated sample by sample.
  auto t = Clock::now();
  std::vector<ImagePlane> means(n, ImagePlane(w, h));
  ImagePlane input_mean(w, h);
  std::vector<DenseMatrix> systems(pixels);
  std::vector<std::vector<double>> cross(pixels);
  ParallelFor(h, [&](std::size_t lo, std::size_t hi) {
    std::vector<double> mu(n);
    for (int y = static_cast<int>(lo); y < static_cast<int>(hi); ++y) {
      for (int x = 0; x < w; ++x) {
        const WindowBounds b = ClippedWindow(w, h, window, x, y);
        const double cnt = b.count();
        std::fill(mu.begin(), mu.end(), 0.0);
        double mu_y = 0.0;
        for (int qy = b.y0; qy < b.y1; ++qy) {
          for (int qx = b.x0; qx < b.x1; ++qx) {
            for (int i = 0; i < n; ++i) mu[i] += guidance[i](qx, qy);
            mu_y += input(qx, qy);
          }
        }
        for (auto& m : mu) m /= cnt;
        mu_y /= cnt;

        DenseMatrix a(n, n);
        std::vector<double> c(n, 0.0);
        for (int qy = b.y0; qy < b.y1; ++qy) {
          for (int qx = b.x0; qx < b.x1; ++qx) {
            const double dy = input(qx, qy) - mu_y;
            for (int i = 0; i < n; ++i) {
              const double di = guidance[i](qx, qy) - mu[i];
              c[i] += di * dy;
              for (int j = 0; j < n; ++j) {
                a(i, j) += di * (guidance[j](qx, qy) - mu[j]);
              }
            }
          }
        }
        for (int i = 0; i < n; ++i) a(i, i) += eps;

        const std::size_t px = static_cast<std::size_t>(y) * w + x;
        systems[px] = std::move(a);
        cross[px] = std::move(c);
        for (int i = 0; i < n; ++i) means[i][px] = mu[i];
        input_mean[px] = mu_y;
      }
    }
  });
  result.times.gram_ms = ElapsedMs(t);

  // Pass 2: explicit inverse per pixel.
  t = Clock::now();
  ParallelFor(pixels, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t px = lo; px < hi; ++px) {
      try {
        systems[px] = InvertDense(std::move(systems[px]));
      } catch (const std::domain_error&) {
        throw NumericalDegeneracy(
            "singular guided-filter system",
            PixelCoord{static_cast<int>(px % w), static_cast<int>(px / w)});
      }
    }
  });
  result.times.alpha_ms = ElapsedMs(t);

  // Pass 3: slopes = inverse * cross.
  t = Clock::now();
  std::vector<ImagePlane> slopes(n, ImagePlane(w, h));
  ParallelFor(pixels, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t px = lo; px < hi; ++px) {
      const DenseMatrix& inv = systems[px];
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += inv(i, j) * cross[px][j];
        slopes[i][px] = s;
      }
    }
  });
  std::vector<ImagePlane> coef;
  coef.emplace_back(w, h);
  for (std::size_t px = 0; px < pixels; ++px) {
    double v = input_mean[px];
    for (int i = 0; i < n; ++i) v -= slopes[i][px] * means[i][px];
    coef[0][px] = v;
  }
  coef.insert(coef.end(), slopes.begin(), slopes.end());
  const WeightStack weights(std::move(coef));
  result.times.weights_ms = ElapsedMs(t);

  // Pass 4: window-by-window averaging of the local models.
  t = Clock::now();
  result.output = NaiveAggregate(weights, guidance, window);
  result.times.aggregate_ms = ElapsedMs(t);

  result.times.total_ms = ElapsedMs(start);
  return result;
}

ImagePlane GfFilter(const ImagePlane& input, const ChannelStack& guidance,
                    int radius, double eps) {
  RequireGrayOrColor(guidance);
  return GfFilterTimed(input, guidance, WindowSpec(radius), eps).output;
}

ImagePlane NaiveGfFilter(const ImagePlane& input, const ChannelStack& guidance,
                         int radius, double eps) {
  RequireGrayOrColor(guidance);
  return NaiveGfFilterTimed(input, guidance, WindowSpec(radius), eps).output;
}

}  // namespace hgf
