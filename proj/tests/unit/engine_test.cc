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

#include <cmath>
#include <random>

#include "doctest.h"
#include "hgf/engine.h"
#include "hgf/error.h"
#include "hgf/fixtures.h"
#include "hgf/parallel.h"
#include "hgf/ridge_oracle.h"
#include "oracles.h"

namespace hgf {
namespace {

using testing::GramWithOnes;
using testing::InverseResidual;
using testing::NaiveWindowDot;
using testing::RandomVectors;

// 1x1 Gram table holding the entries of `g` (dim n+2).
GramTable ScalarGram(const DenseMatrix& g, int n) {
  std::vector<ImagePlane> packed(SymmetricPlanes::PackedSize(n + 2));
  for (int j = 0; j < n + 2; ++j) {
    for (int i = 0; i <= j; ++i) {
      packed[SymmetricPlanes::PackedIndex(i, j)] = ImagePlane(1, 1, g(i, j));
    }
  }
  return GramTable(n, std::move(packed));
}

// Pads a (n+1)-dim Gram matrix with a zero Y row and column.
DenseMatrix PadY(const DenseMatrix& g) {
  DenseMatrix out(g.rows() + 1, g.cols() + 1);
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) out(i, j) = g(i, j);
  }
  return out;
}

DenseMatrix AlphaAsMatrix(const AlphaTable& a, int x = 0, int y = 0) {
  const int dim = a.stage() + 1;
  DenseMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = a.at(i, j)(x, y);
  }
  return m;
}

AlphaTable RunAlpha(const GramTable& gram, double lambda) {
  AlphaTable a = AlphaInit(gram, lambda);
  for (int k = 1; k <= gram.channels(); ++k) a = AlphaStep(a, gram, lambda, k);
  return a;
}

TEST_CASE("ComputeGram with a ones channel equals window counts") {
  const ImagePlane ones(5, 4, 1.0);
  const GramTable g = ComputeGram(ChannelStack({ones}), ones, WindowSpec(1));
  const ImagePlane counts = WindowCounts(5, 4, WindowSpec(1));
  CHECK(g.at(0, 0) == counts);
  CHECK(g.at(0, 1) == counts);
  CHECK(g.at(1, 1) == counts);
  CHECK(g.at(0, 0)(0, 0) == 4.0);
  CHECK(g.at(0, 0)(2, 2) == 9.0);
}

TEST_CASE("ComputeGram on a 2x2 plane covers the whole image") {
  const ImagePlane p(2, 2, {1, 2, 3, 4});
  const GramTable g = ComputeGram(ChannelStack({p}), p, WindowSpec(1));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(g.at(1, 1)[k] == 30.0);
    CHECK(g.at(0, 1)[k] == 10.0);
    CHECK(g.at(0, 0)[k] == 4.0);
  }
}

TEST_CASE("ComputeGram matches per-window dot products") {
  std::mt19937_64 rng(3);
  const ChannelStack guide = RandomStack(3, 16, 16, rng);
  const ImagePlane y = RandomPlane(16, 16, rng);
  for (int r : {1, 3}) {
    const GramTable g = ComputeGram(guide, y, WindowSpec(r));
    const ImagePlane ones(16, 16, 1.0);
    auto chan = [&](int i) -> const ImagePlane& {
      return i == 0 ? ones : (i == 4 ? y : guide[i - 1]);
    };
    for (int j = 0; j <= 4; ++j) {
      for (int i = 0; i <= j; ++i) {
        CHECK(MaxAbsDiff(g.at(i, j), NaiveWindowDot(chan(i), chan(j), r)) <= 1e-9);
        CHECK(g.at(j, i) == g.at(i, j));
      }
    }
  }
}

TEST_CASE("ComputeGram is exact on integer planes") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 255);
  ImagePlane a(20, 13), b(20, 13);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] = d(rng);
    b[k] = d(rng);
  }
  const GramTable g = ComputeGram(ChannelStack({a}), b, WindowSpec(3));
  CHECK(g.at(1, 1) == NaiveWindowDot(a, a, 3));
  CHECK(g.at(1, 2) == NaiveWindowDot(a, b, 3));
  CHECK(g.at(2, 2) == NaiveWindowDot(b, b, 3));
}

TEST_CASE("ComputeGram rejects mismatched shapes") {
  CHECK_THROWS_AS(ComputeGram(ChannelStack({ImagePlane(3, 3)}), ImagePlane(3, 4),
                              WindowSpec(1)),
                  InvalidArgument);
}

TEST_CASE("AlphaInit matches the dense inverse of lambda E + 1 1^T") {
  // Three-sample window: c_0 = (1, 1, 1), G_00 = 3.
  for (double lambda : {1.0, 2.0}) {
    DenseMatrix g(2, 2);
    g(0, 0) = 3.0;
    const AlphaTable a = AlphaInit(ScalarGram(g, 0), lambda);
    DenseMatrix m(3, 3, 1.0);
    for (int i = 0; i < 3; ++i) m(i, i) += lambda;
    const DenseMatrix inv = InvertDense(m);
    // Off-diagonal of the dense inverse equals alpha_00.
    CHECK(a.at(0, 0)(0, 0) == doctest::Approx(inv(0, 1)).epsilon(1e-14));
  }
  DenseMatrix g(2, 2);
  g(0, 0) = 3.0;
  CHECK(AlphaInit(ScalarGram(g, 0), 1.0).at(0, 0)(0, 0) == doctest::Approx(-0.25));
  CHECK(AlphaInit(ScalarGram(g, 0), 2.0).at(0, 0)(0, 0) == doctest::Approx(-0.1));
  CHECK(std::abs(AlphaInit(ScalarGram(g, 0), 1e9).at(0, 0)(0, 0)) < 1e-17);
}

TEST_CASE("The uncorrected initial coefficient fails the identity at lambda 2") {
  std::vector<std::vector<double>> c;  // only c_0 = ones of length 3
  c.emplace_back(3, 0.0);              // zero channel keeps the helper happy
  DenseMatrix good(2, 2), bad(2, 2);
  good(0, 0) = -0.1;
  bad(0, 0) = -0.2;
  CHECK(InverseResidual(c, good, 2.0) < 1e-14);
  CHECK(InverseResidual(c, bad, 2.0) > 0.1);
}

TEST_CASE("AlphaStep with a zero channel leaves the inverse unchanged") {
  std::mt19937_64 rng(8);
  auto c = RandomVectors(2, 9, rng);
  c.emplace_back(9, 0.0);
  const double lambda = 0.05;
  const DenseMatrix g = GramWithOnes(c);
  const AlphaTable a = RunAlpha(ScalarGram(PadY(g), 3), lambda);
  const DenseMatrix alpha = AlphaAsMatrix(a);
  CHECK(InverseResidual(c, alpha, lambda) <= 1e-8);
  const AlphaTable before = [&] {
    AlphaTable t = AlphaInit(ScalarGram(PadY(g), 3), lambda);
    for (int k = 1; k <= 2; ++k) t = AlphaStep(t, ScalarGram(PadY(g), 3), lambda, k);
    return t;
  }();
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      CHECK(a.at(i, j)(0, 0) == before.at(i, j)(0, 0));
    }
  }
}

TEST_CASE("AlphaStep with an orthogonal channel is block diagonal") {
  const double lambda = 0.05;
  const std::vector<std::vector<double>> c = {{1, -1, 2, -2, 0.5, -0.5, 0, 3, -3}};
  const DenseMatrix g = GramWithOnes(c);
  REQUIRE(g(0, 1) == 0.0);
  const AlphaTable a = RunAlpha(ScalarGram(PadY(g), 1), lambda);
  CHECK(a.at(0, 1)(0, 0) == 0.0);
  CHECK(a.at(1, 0)(0, 0) == 0.0);
  CHECK(a.at(1, 1)(0, 0) ==
        doctest::Approx(-1.0 / lambda / (lambda + g(1, 1))).epsilon(1e-12));
}

TEST_CASE("Alpha recursion inverts lambda E + sum c c^T") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> len_dist(1, 225);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 9;
    const int len = trial == 0 ? 9 : len_dist(rng);
    const double lambda = trial % 2 ? 1.0 : 0.05;
    const auto c = RandomVectors(n, len, rng);
    const DenseMatrix g = GramWithOnes(c);
    const DenseMatrix alpha = AlphaAsMatrix(RunAlpha(ScalarGram(PadY(g), n), lambda));
    CHECK(InverseResidual(c, alpha, lambda) <= 1e-8);
  }
}

TEST_CASE("Plane recursion matches the literal double-sum recursion") {
  std::mt19937_64 rng(4);
  const int n = 5;
  const ChannelStack guide = RandomStack(n, 9, 7, rng);
  const ImagePlane y = RandomPlane(9, 7, rng);
  const GramTable gram = ComputeGram(guide, y, WindowSpec(2));
  const double lambda = 0.05;
  AlphaTable a = AlphaInit(gram, lambda);
  for (int k = 1; k <= n; ++k) {
    a = AlphaStep(a, gram, lambda, k);
    for (int py = 0; py < 7; ++py) {
      for (int px = 0; px < 9; ++px) {
        DenseMatrix g(n + 2, n + 2);
        for (int i = 0; i < n + 2; ++i) {
          for (int j = 0; j < n + 2; ++j) g(i, j) = gram.at(i, j)(px, py);
        }
        const DenseMatrix ref = AlphaRecursionReference(g, k, lambda);
        for (int i = 0; i <= k; ++i) {
          for (int j = 0; j <= k; ++j) {
            const double scale = std::max(1.0, std::abs(ref(i, j)));
            CHECK(std::abs(a.at(i, j)(px, py) - ref(i, j)) <= 1e-9 * scale);
            CHECK(std::abs(ref(i, j) - ref(j, i)) <= 1e-9 * scale);
          }
        }
      }
    }
  }
}

TEST_CASE("AlphaStep reports the degenerate pixel") {
  const double lambda = 0.5;
  std::vector<ImagePlane> packed(SymmetricPlanes::PackedSize(3));
  for (auto& p : packed) p = ImagePlane(3, 2, 0.0);
  packed[SymmetricPlanes::PackedIndex(0, 0)] = ImagePlane(3, 2, 4.0);
  packed[SymmetricPlanes::PackedIndex(1, 1)] = ImagePlane(3, 2, 1.0);
  // 1 + G_11 / lambda = 0 at (2, 1).
  ImagePlane g11(3, 2, 1.0);
  g11(2, 1) = -lambda;
  packed[SymmetricPlanes::PackedIndex(1, 1)] = g11;
  const GramTable gram(1, std::move(packed));
  const AlphaTable a0 = AlphaInit(gram, lambda);
  try {
    AlphaStep(a0, gram, lambda, 1);
    FAIL("expected NumericalDegeneracy");
  } catch (const NumericalDegeneracy& e) {
    CHECK(e.where() == PixelCoord{2, 1});
  }
}

TEST_CASE("ComputeWeights with only the ones channel is the scalar ridge") {
  std::vector<ImagePlane> packed(SymmetricPlanes::PackedSize(2));
  packed[SymmetricPlanes::PackedIndex(0, 0)] = ImagePlane(1, 1, 9.0);
  packed[SymmetricPlanes::PackedIndex(0, 1)] = ImagePlane(1, 1, 9.0);
  packed[SymmetricPlanes::PackedIndex(1, 1)] = ImagePlane(1, 1, 9.0);
  const GramTable gram(0, std::move(packed));
  const WeightStack w = ComputeWeights(AlphaInit(gram, 0.05), gram, 0.05);
  REQUIRE(w.channels() == 0);
  CHECK(w[0](0, 0) == doctest::Approx(9.0 / 9.05).epsilon(1e-12));
  CHECK(w[0](0, 0) == doctest::Approx(0.994475).epsilon(1e-6));
}

TEST_CASE("ComputeWeights is zero for a zero input") {
  std::mt19937_64 rng(9);
  const ChannelStack guide = RandomStack(3, 12, 10, rng);
  const GramTable gram = ComputeGram(guide, ImagePlane(12, 10), WindowSpec(2));
  const WeightStack w = ComputeWeights(RunAlpha(gram, 0.05), gram, 0.05);
  for (const auto& p : w.planes()) CHECK(p == ImagePlane(12, 10));
}

TEST_CASE("ComputeWeights matches the per-window ridge solve") {
  std::mt19937_64 rng(10);
  const int n = 3;
  const ChannelStack guide = RandomStack(n, 14, 11, rng);
  const ImagePlane y = RandomPlane(14, 11, rng);
  const WindowSpec window(2);
  const double lambda = 0.05;
  const GramTable gram = ComputeGram(guide, y, window);
  const WeightStack w = ComputeWeights(RunAlpha(gram, lambda), gram, lambda);
  const WeightStack ref = DirectRidgeCoefficients(y, guide, lambda, window);
  for (int k = 0; k <= n; ++k) CHECK(MaxAbsDiff(w[k], ref[k]) <= 1e-8);
}

TEST_CASE("ComputeWeights rejects an unfinished alpha table") {
  std::mt19937_64 rng(1);
  const ChannelStack guide = RandomStack(2, 5, 5, rng);
  const GramTable gram = ComputeGram(guide, guide[0], WindowSpec(1));
  CHECK_THROWS_AS(ComputeWeights(AlphaInit(gram, 0.1), gram, 0.1), InvalidArgument);
}

TEST_CASE("Aggregate special cases and the naive oracle") {
  std::mt19937_64 rng(12);
  const ChannelStack guide = RandomStack(2, 10, 9, rng);
  const WindowSpec window(2);
  SUBCASE("constant coefficients") {
    const WeightStack w({ImagePlane(10, 9, 0.25), ImagePlane(10, 9, 2.0),
                         ImagePlane(10, 9, -0.5)});
    const ImagePlane z = Aggregate(w, guide, window);
    for (std::size_t k = 0; k < z.size(); ++k) {
      CHECK(z[k] == doctest::Approx(2.0 * guide[0][k] - 0.5 * guide[1][k] + 0.25)
                         .epsilon(1e-15));
    }
  }
  SUBCASE("intercept only is a mean filter") {
    const ImagePlane y = RandomPlane(10, 9, rng);
    const WeightStack w({y, ImagePlane(10, 9), ImagePlane(10, 9)});
    CHECK(MaxAbsDiff(Aggregate(w, guide, window), BoxAverage(y, window)) == 0.0);
  }
  SUBCASE("random coefficients") {
    const WeightStack w({RandomPlane(10, 9, rng), RandomPlane(10, 9, rng),
                         RandomPlane(10, 9, rng)});
    CHECK(MaxAbsDiff(Aggregate(w, guide, window),
                     NaiveAggregate(w, guide, window)) <= 1e-9);
  }
}

TEST_CASE("HgfFilter reproduces a constant input") {
  std::mt19937_64 rng(13);
  const ChannelStack guide = RandomStack(3, 24, 20, rng);
  const double c = 0.7;
  const ImagePlane z =
      HgfFilter(ImagePlane(24, 20, c), guide, FilterParams::Make(1e-6, 3, 2));
  for (std::size_t k = 0; k < z.size(); ++k) CHECK(std::abs(z[k] - c) <= 1e-3);
}

TEST_CASE("HgfFilter is linear in the input") {
  std::mt19937_64 rng(14);
  const ChannelStack guide = RandomStack(1, 32, 28, rng);
  const ImagePlane y1 = RandomPlane(32, 28, rng);
  const ImagePlane y2 = RandomPlane(32, 28, rng);
  const FilterParams params = FilterParams::Make(0.05, 4, 3);
  const double a = 0.3, b = -1.7;
  const ImagePlane lhs = HgfFilter(a * y1 + b * y2, guide, params);
  const ImagePlane rhs =
      a * HgfFilter(y1, guide, params) + b * HgfFilter(y2, guide, params);
  CHECK(MaxAbsDiff(lhs, rhs) <= 1e-8);
}

TEST_CASE("HgfFilter agrees with the direct ridge filter") {
  std::mt19937_64 rng(15);
  const ChannelStack guide = RandomStack(3, 64, 64, rng);
  const ImagePlane y = RandomPlane(64, 64, rng);
  const FilterParams params = FilterParams::Make(0.05, 7, 2);
  CHECK(MaxAbsDiff(HgfFilter(y, guide, params), DirectRidgeFilter(y, guide, params)) <=
        1e-6);
}

TEST_CASE("HgfFilter commutes with transposition bit for bit") {
  std::mt19937_64 rng(16);
  const ChannelStack guide = RandomStack(3, 23, 17, rng);
  const ImagePlane y = RandomPlane(23, 17, rng);
  const FilterParams params = FilterParams::Make(0.05, 3, 2);
  const ImagePlane z = HgfFilter(y, guide, params);
  const ImagePlane zt = HgfFilter(y.Transposed(), guide.Transposed(), params);
  CHECK(zt == z.Transposed());
}

TEST_CASE("PreparedGuidance matches the one-shot pipeline bit for bit") {
  std::mt19937_64 rng(17);
  const ChannelStack guide = RandomStack(4, 21, 18, rng);
  const PreparedGuidance prepared(guide, 0.05, WindowSpec(3));
  for (int t = 0; t < 3; ++t) {
    const ImagePlane y = RandomPlane(21, 18, rng);
    CHECK(prepared.Filter(y) ==
          HgfFilterSynthesized(y, guide, 0.05, WindowSpec(3)).output);
  }
}

TEST_CASE("Stage times are non-negative and bounded by the total") {
  std::mt19937_64 rng(18);
  const ChannelStack guide = RandomStack(1, 64, 64, rng);
  const FilterResult r =
      HgfFilterTimed(RandomPlane(64, 64, rng), guide, FilterParams{});
  const StageTimes& t = r.times;
  CHECK(t.gram_ms >= 0.0);
  CHECK(t.alpha_ms >= 0.0);
  CHECK(t.weights_ms >= 0.0);
  CHECK(t.aggregate_ms >= 0.0);
  CHECK(t.gram_ms + t.alpha_ms + t.weights_ms + t.aggregate_ms <= t.total_ms * 1.0001);
}

TEST_CASE("Lambda validation") {
  CHECK_THROWS_AS(ValidateLambda(0.0), InvalidArgument);
  CHECK_THROWS_AS(ValidateLambda(-1.0), InvalidArgument);
  CHECK_THROWS_AS(ValidateLambda(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(ValidateLambda(INFINITY), InvalidArgument);
  CHECK(ValidateLambda(1e-9) == FilterParams::kMinLambda);
  CHECK(ValidateLambda(0.3) == 0.3);
  const FilterParams p{};
  CHECK(p.lambda == 0.05);
  CHECK(p.window.radius() == 7);
  CHECK(p.poly.degree() == 2);
  CHECK_THROWS_AS(FilterParams::Make(0.05, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(FilterParams::Make(0.05, 7, 0), InvalidArgument);
}

TEST_CASE("HgfFilter rejects mismatched shapes") {
  CHECK_THROWS_AS(HgfFilter(ImagePlane(4, 4), ChannelStack({ImagePlane(4, 5)}),
                            FilterParams{}),
                  InvalidArgument);
}

}  // namespace
}  // namespace hgf
