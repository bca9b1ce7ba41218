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

#include "hgf/engine.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "hgf/parallel.h"

namespace hgf {
namespace {

constexpr double kDegenerateDenominator = 1e-12;

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

// Row-major pixel loop split across workers.
template <typename Fn>
void ForEachPixelRow(int width, int height, Fn fn) {
  ParallelFor(height, [&](std::size_t lo, std::size_t hi) {
    for (int y = static_cast<int>(lo); y < static_cast<int>(hi); ++y) {
      fn(y, static_cast<std::size_t>(y) * width, width);
    }
  });
}

std::vector<const double*> PackedPointers(const SymmetricPlanes& planes) {
  std::vector<const double*> ptrs;
  ptrs.reserve(planes.packed().size());
  for (const auto& p : planes.packed()) ptrs.push_back(p.data().data());
  return ptrs;
}

std::vector<ImagePlane> ZeroPlanes(std::size_t count, int width, int height) {
  return std::vector<ImagePlane>(count, ImagePlane(width, height));
}

}  // namespace

double ValidateLambda(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw InvalidArgument("lambda must be finite and > 0");
  }
  return std::max(lambda, FilterParams::kMinLambda);
}

FilterParams FilterParams::Make(double lambda, int radius, int degree) {
  return FilterParams{ValidateLambda(lambda), WindowSpec(radius),
                      PolynomialSpec(degree)};
}

SymmetricPlanes::SymmetricPlanes(int dim, std::vector<ImagePlane> packed)
    : dim_(dim), planes_(std::move(packed)) {
  if (dim < 1 || planes_.size() != PackedSize(dim)) {
    throw InvalidArgument("symmetric table: expected " +
                          std::to_string(PackedSize(std::max(dim, 0))) +
                          " planes, got " + std::to_string(planes_.size()));
  }
  for (const auto& p : planes_) {
    RequireSameShape(planes_.front(), p, "symmetric table");
  }
}

const ImagePlane& SymmetricPlanes::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw InvalidArgument("symmetric table index (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") out of range");
  }
  return planes_[PackedIndex(i, j)];
}

GramTable::GramTable(int n, std::vector<ImagePlane> packed)
    : planes_(n + 2, std::move(packed)) {
  if (n < 0) throw InvalidArgument("gram table: negative channel count");
}

AlphaTable::AlphaTable(int channels, int stage, std::vector<ImagePlane> packed)
    : channels_(channels), planes_(stage + 1, std::move(packed)) {
  if (stage < 0 || stage > channels) {
    throw InvalidArgument("alpha table: stage out of range");
  }
}

WeightStack::WeightStack(std::vector<ImagePlane> planes)
    : planes_(std::move(planes)) {
  if (planes_.empty()) throw InvalidArgument("weight stack is empty");
  for (const auto& p : planes_) {
    RequireSameShape(planes_.front(), p, "weight stack");
  }
}

namespace {

// box_sum(a * b); a == nullptr stands for the ones channel.
ImagePlane GramEntry(const ImagePlane* a, const ImagePlane& b,
                     WindowSpec window) {
  if (a == nullptr) return internal::BoxSumSerial(b, window);
  ImagePlane prod(b.width(), b.height());
  for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = (*a)[k] * b[k];
  return internal::BoxSumSerial(prod, window);
}

// Packed Gram planes for 0 <= i <= j < dim, with channel(0) == nullptr for
// the ones channel. Entries with j < first_column are skipped (left empty).
std::vector<ImagePlane> GramPlanes(
    int dim, int first_column, int width, int height, WindowSpec window,
    const std::function<const ImagePlane*(int)>& channel) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = first_column; j < dim; ++j) {
    for (int i = 0; i <= j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<ImagePlane> packed(SymmetricPlanes::PackedSize(dim));
  ParallelFor(pairs.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p) {
      const auto [i, j] = pairs[p];
      ImagePlane& out = packed[SymmetricPlanes::PackedIndex(i, j)];
      if (j == 0) {
        out = WindowCounts(width, height, window);
      } else {
        out = GramEntry(channel(i), *channel(j), window);
      }
    }
  });
  return packed;
}

}  // namespace

GramTable ComputeGram(const ChannelStack& guidance, const ImagePlane& input,
                      WindowSpec window) {
  if (!guidance.SameShape(input)) {
    throw InvalidArgument("gram: guidance and input dimensions differ");
  }
  const int n = guidance.channels();
  auto packed = GramPlanes(
      n + 2, 0, input.width(), input.height(), window,
      [&](int k) -> const ImagePlane* {
        if (k == 0) return nullptr;
        return k <= n ? &guidance[k - 1] : &input;
      });
  return GramTable(n, std::move(packed));
}

namespace {

AlphaTable AlphaInitImpl(const SymmetricPlanes& gram, int n, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("alpha init: lambda must be > 0");
  const ImagePlane& g00 = gram.at(0, 0);
  const double inv_lambda = 1.0 / lambda;
  ImagePlane a00(g00.width(), g00.height());
  for (std::size_t k = 0; k < a00.size(); ++k) {
    a00[k] = -inv_lambda / (lambda + g00[k]);
  }
  std::vector<ImagePlane> packed;
  packed.push_back(std::move(a00));
  return AlphaTable(n, 0, std::move(packed));
}

AlphaTable AlphaStepImpl(const AlphaTable& alpha, const SymmetricPlanes& gram,
                         int n, double lambda, int kappa) {
  if (kappa < 1 || kappa > n) {
    throw InvalidArgument("alpha step: kappa " + std::to_string(kappa) +
                          " outside [1, " + std::to_string(n) + "]");
  }
  if (alpha.stage() != kappa - 1 || alpha.channels() != n) {
    throw InvalidArgument("alpha step: table is at stage " +
                          std::to_string(alpha.stage()) + ", expected " +
                          std::to_string(kappa - 1));
  }
  if (!(lambda > 0.0)) throw InvalidArgument("alpha step: lambda must be > 0");

  const int w = gram.width();
  const int h = gram.height();
  const double inv_lambda = 1.0 / lambda;
  const double inv_lambda2 = inv_lambda * inv_lambda;

  const auto prev = PackedPointers(alpha.planes());
  std::vector<const double*> g_col(kappa);
  for (int m = 0; m < kappa; ++m) g_col[m] = gram.at(m, kappa).data().data();
  const double* g_kk = gram.at(kappa, kappa).data().data();

  auto next = ZeroPlanes(SymmetricPlanes::PackedSize(kappa + 1), w, h);
  std::vector<double*> out;
  for (auto& p : next) out.push_back(p.data().data());

  // Row-at-a-time evaluation keeps every inner loop contiguous.
  ForEachPixelRow(w, h, [&](int y, std::size_t row, int width) {
    std::vector<double> u(static_cast<std::size_t>(kappa) * width);
    std::vector<double> gamma(width);
    std::vector<double> gu(width);
    for (int i = 0; i < kappa; ++i) {
      double* ui = &u[static_cast<std::size_t>(i) * width];
      std::fill(ui, ui + width, 0.0);
      for (int m = 0; m < kappa; ++m) {
        const double* a = prev[SymmetricPlanes::PackedIndex(i, m)] + row;
        const double* g = g_col[m] + row;
        for (int x = 0; x < width; ++x) ui[x] += a[x] * g[x];
      }
    }
    std::fill(gamma.begin(), gamma.end(), 0.0);
    for (int m = 0; m < kappa; ++m) {
      const double* um = &u[static_cast<std::size_t>(m) * width];
      const double* g = g_col[m] + row;
      for (int x = 0; x < width; ++x) gamma[x] += g[x] * um[x];
    }
    const double* gkk = g_kk + row;
    for (int x = 0; x < width; ++x) {
      const double denom = 1.0 + gkk[x] * inv_lambda + gamma[x];
      if (!(std::abs(denom) >= kDegenerateDenominator)) {
        throw NumericalDegeneracy(
            "degenerate rank-one update at channel " + std::to_string(kappa),
            PixelCoord{x, y});
      }
      gamma[x] = -1.0 / denom;
    }
    for (int j = 0; j < kappa; ++j) {
      const double* uj = &u[static_cast<std::size_t>(j) * width];
      for (int x = 0; x < width; ++x) gu[x] = gamma[x] * uj[x];
      for (int i = 0; i <= j; ++i) {
        const std::size_t idx = SymmetricPlanes::PackedIndex(i, j);
        const double* ui = &u[static_cast<std::size_t>(i) * width];
        const double* a = prev[idx] + row;
        double* o = out[idx] + row;
        for (int x = 0; x < width; ++x) o[x] = a[x] + gu[x] * ui[x];
      }
      double* o = out[SymmetricPlanes::PackedIndex(j, kappa)] + row;
      for (int x = 0; x < width; ++x) o[x] = inv_lambda * gu[x];
    }
    double* o = out[SymmetricPlanes::PackedIndex(kappa, kappa)] + row;
    for (int x = 0; x < width; ++x) o[x] = inv_lambda2 * gamma[x];
  });
  return AlphaTable(n, kappa, std::move(next));
}

AlphaTable FullAlpha(const SymmetricPlanes& gram, int n, double lambda) {
  AlphaTable alpha = AlphaInitImpl(gram, n, lambda);
  for (int kappa = 1; kappa <= n; ++kappa) {
    alpha = AlphaStepImpl(alpha, gram, n, lambda, kappa);
  }
  return alpha;
}

// gram[PackedIndex(i, j)] for 0 <= i <= j <= n+1.
WeightStack WeightsImpl(const AlphaTable& alpha,
                        const std::vector<const double*>& g, int n, int w,
                        int h, double lambda) {
  if (alpha.stage() != n || alpha.channels() != n) {
    throw InvalidArgument("weights: alpha table at stage " +
                          std::to_string(alpha.stage()) + ", expected " +
                          std::to_string(n));
  }
  if (!(lambda > 0.0)) throw InvalidArgument("weights: lambda must be > 0");
  const double inv_lambda = 1.0 / lambda;

  const auto a = PackedPointers(alpha.planes());
  const auto gp = [&](int i, int j) {
    return g[SymmetricPlanes::PackedIndex(i, j)];
  };

  auto planes = ZeroPlanes(n + 1, w, h);
  std::vector<double*> out;
  for (auto& p : planes) out.push_back(p.data().data());

  // t_i = sum_j alpha_ij G_{j,n+1}, then
  // W_k = G_{k,n+1} / lambda + sum_i G_ki t_i, one row at a time.
  ForEachPixelRow(w, h, [&](int, std::size_t row, int width) {
    std::vector<double> t(static_cast<std::size_t>(n + 1) * width, 0.0);
    for (int i = 0; i <= n; ++i) {
      double* ti = &t[static_cast<std::size_t>(i) * width];
      for (int j = 0; j <= n; ++j) {
        const double* aij = a[SymmetricPlanes::PackedIndex(i, j)] + row;
        const double* gj = gp(j, n + 1) + row;
        for (int x = 0; x < width; ++x) ti[x] += aij[x] * gj[x];
      }
    }
    for (int k = 0; k <= n; ++k) {
      double* o = out[k] + row;
      const double* gk = gp(k, n + 1) + row;
      for (int x = 0; x < width; ++x) o[x] = inv_lambda * gk[x];
      for (int i = 0; i <= n; ++i) {
        const double* gki = gp(k, i) + row;
        const double* ti = &t[static_cast<std::size_t>(i) * width];
        for (int x = 0; x < width; ++x) o[x] += gki[x] * ti[x];
      }
    }
  });
  return WeightStack(std::move(planes));
}

}  // namespace

AlphaTable AlphaInit(const GramTable& gram, double lambda) {
  return AlphaInitImpl(gram.planes(), gram.channels(), lambda);
}

AlphaTable AlphaStep(const AlphaTable& alpha, const GramTable& gram,
                     double lambda, int kappa) {
  return AlphaStepImpl(alpha, gram.planes(), gram.channels(), lambda, kappa);
}

WeightStack ComputeWeights(const AlphaTable& alpha, const GramTable& gram,
                           double lambda) {
  return WeightsImpl(alpha, PackedPointers(gram.planes()), gram.channels(),
                     gram.width(), gram.height(), lambda);
}

ImagePlane Aggregate(const WeightStack& weights, const ChannelStack& guidance,
                     WindowSpec window) {
  const int n = weights.channels();
  if (guidance.channels() != n) {
    throw InvalidArgument("aggregate: " + std::to_string(n + 1) +
                          " weight planes for " +
                          std::to_string(guidance.channels()) +
                          " guidance channels");
  }
  if (!guidance.SameShape(weights[0])) {
    throw InvalidArgument("aggregate: dimension mismatch");
  }
  const int w = guidance.width();
  const int h = guidance.height();

  std::vector<ImagePlane> sums(n + 1);
  ParallelFor(n + 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      sums[k] = internal::BoxSumSerial(weights[static_cast<int>(k)], window);
    }
  });

  ImagePlane z(w, h);
  ForEachPixelRow(w, h, [&](int y, std::size_t row, int width) {
    for (int x = 0; x < width; ++x) {
      const std::size_t px = row + x;
      const double count = ClippedWindow(w, h, window, x, y).count();
      double v = sums[0][px] / count;
      for (int i = 1; i <= n; ++i) v += (sums[i][px] / count) * guidance[i - 1][px];
      z[px] = v;
    }
  });
  return z;
}

FilterResult HgfFilterSynthesized(const ImagePlane& input,
                                  const ChannelStack& guidance, double lambda,
                                  WindowSpec window) {
  lambda = ValidateLambda(lambda);
  if (!guidance.SameShape(input)) {
    throw InvalidArgument("hgf: input and guidance dimensions differ");
  }
  FilterResult result;
  const auto start = Clock::now();

  auto t = Clock::now();
  const GramTable gram = ComputeGram(guidance, input, window);
  result.times.gram_ms = ElapsedMs(t);

  t = Clock::now();
  const AlphaTable alpha = FullAlpha(gram.planes(), gram.channels(), lambda);
  result.times.alpha_ms = ElapsedMs(t);

  t = Clock::now();
  const WeightStack weights = ComputeWeights(alpha, gram, lambda);
  result.times.weights_ms = ElapsedMs(t);

  t = Clock::now();
  result.output = Aggregate(weights, guidance, window);
  result.times.aggregate_ms = ElapsedMs(t);

  result.times.total_ms = ElapsedMs(start);
  return result;
}

FilterResult HgfFilterTimed(const ImagePlane& input,
                            const ChannelStack& raw_guidance,
                            const FilterParams& params) {
  const auto t = Clock::now();
  const ChannelStack guidance =
      SynthesizePolynomialGuidance(raw_guidance, params.poly);
  const double synth_ms = ElapsedMs(t);
  FilterResult result =
      HgfFilterSynthesized(input, guidance, params.lambda, params.window);
  result.times.gram_ms += synth_ms;
  result.times.total_ms += synth_ms;
  return result;
}

ImagePlane HgfFilter(const ImagePlane& input, const ChannelStack& raw_guidance,
                     const FilterParams& params) {
  return HgfFilterTimed(input, raw_guidance, params).output;
}

namespace {

std::vector<ImagePlane> GuidanceGram(const ChannelStack& guidance,
                                     WindowSpec window) {
  return GramPlanes(guidance.channels() + 1, 0, guidance.width(),
                    guidance.height(), window,
                    [&](int k) -> const ImagePlane* {
                      return k == 0 ? nullptr : &guidance[k - 1];
                    });
}

}  // namespace

PreparedGuidance::PreparedGuidance(ChannelStack guidance, double lambda,
                                   WindowSpec window)
    : guidance_(std::move(guidance)),
      lambda_(ValidateLambda(lambda)),
      window_(window),
      guidance_gram_(GuidanceGram(guidance_, window_)),
      alpha_(FullAlpha(SymmetricPlanes(guidance_.channels() + 1, guidance_gram_),
                       guidance_.channels(), lambda_)) {}

ImagePlane PreparedGuidance::Filter(const ImagePlane& input) const {
  if (!guidance_.SameShape(input)) {
    throw InvalidArgument("hgf: input and guidance dimensions differ");
  }
  const int n = guidance_.channels();
  auto column = GramPlanes(n + 2, n + 1, input.width(), input.height(),
                           window_, [&](int k) -> const ImagePlane* {
                             if (k == 0) return nullptr;
                             return k <= n ? &guidance_[k - 1] : &input;
                           });
  std::vector<const double*> g;
  for (const auto& p : guidance_gram_) g.push_back(p.data().data());
  for (int k = 0; k <= n + 1; ++k) {
    g.push_back(column[SymmetricPlanes::PackedIndex(k, n + 1)].data().data());
  }
  const WeightStack weights =
      WeightsImpl(alpha_, g, n, input.width(), input.height(), lambda_);
  return Aggregate(weights, guidance_, window_);
}

DenseMatrix AlphaRecursionReference(const DenseMatrix& gram, int n,
                                    double lambda) {
  if (gram.rows() < n + 1 || gram.cols() < n + 1) {
    throw InvalidArgument("reference recursion: gram matrix too small");
  }
  const double il = 1.0 / lambda;
  DenseMatrix a(n + 1, n + 1);
  a(0, 0) = -il / (lambda + gram(0, 0));
  for (int k = 1; k <= n; ++k) {
    const DenseMatrix prev = a;
    double quad = 0.0;
    for (int m = 0; m < k; ++m) {
      for (int q = 0; q < k; ++q) quad += prev(m, q) * gram(k, m) * gram(q, k);
    }
    const double gamma = -1.0 / (1.0 + il * gram(k, k) + quad);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double f = 0.0;
        for (int m = 0; m < k; ++m) {
          for (int q = 0; q < k; ++q) {
            f += prev(i, m) * prev(q, j) * gram(m, k) * gram(k, q);
          }
        }
        a(i, j) = gamma * f + prev(i, j);
      }
    }
    for (int i = 0; i < k; ++i) {
      double s = 0.0;
      for (int q = 0; q < k; ++q) s += prev(i, q) * gram(q, k);
      a(i, k) = il * gamma * s;
    }
    for (int j = 0; j < k; ++j) {
      double s = 0.0;
      for (int m = 0; m < k; ++m) s += prev(m, j) * gram(k, m);
      a(k, j) = il * gamma * s;
    }
    a(k, k) = il * il * gamma;
  }
  return a;
}

}  // namespace hgf
