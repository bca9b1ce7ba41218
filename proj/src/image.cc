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

#include "hgf/image.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hgf/parallel.h"

namespace hgf {
namespace {

void CheckDims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw InvalidArgument("image dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

template <typename Fn>
ImagePlane Map(const ImagePlane& a, Fn fn) {
  ImagePlane out(a.width(), a.height());
  auto src = a.data();
  auto dst = out.data();
  ParallelFor(src.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) dst[i] = fn(src[i]);
  });
  return out;
}

template <typename Fn>
ImagePlane Zip(const ImagePlane& a, const ImagePlane& b, const char* where,
               Fn fn) {
  RequireSameShape(a, b, where);
  ImagePlane out(a.width(), a.height());
  auto x = a.data();
  auto y = b.data();
  auto dst = out.data();
  ParallelFor(x.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) dst[i] = fn(x[i], y[i]);
  });
  return out;
}

double GuardedDivisor(double b, std::optional<double> guard, const char* op) {
  if (!guard) {
    if (b == 0.0) throw InvalidArgument(std::string(op) + ": division by zero");
    return b;
  }
  if (std::abs(b) >= *guard) return b;
  return std::signbit(b) ? -*guard : *guard;
}

void ValidateGuard(std::optional<double> guard, const char* op) {
  if (guard && !(*guard > 0.0)) {
    throw InvalidArgument(std::string(op) + ": guard must be positive");
  }
}

void RequireFinite(const ImagePlane& p, const char* op) {
  if (!p.AllFinite()) {
    throw InvalidArgument(std::string(op) + ": result is not finite");
  }
}

}  // namespace

ImagePlane::ImagePlane(int width, int height, double fill)
    : width_(width), height_(height) {
  CheckDims(width, height);
  if (!std::isfinite(fill)) throw InvalidArgument("fill value is not finite");
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

ImagePlane::ImagePlane(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  CheckDims(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgument("plane data length " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
  if (!AllFinite()) throw InvalidArgument("plane data contains NaN or Inf");
}

bool ImagePlane::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

ImagePlane ImagePlane::Transposed() const {
  ImagePlane out(height_, width_);
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out(y, x) = (*this)(x, y);
  }
  return out;
}

ChannelStack::ChannelStack(std::vector<ImagePlane> planes)
    : planes_(std::move(planes)) {
  if (planes_.empty()) throw InvalidArgument("channel stack is empty");
  for (const auto& p : planes_) {
    if (p.empty()) throw InvalidArgument("channel stack holds an empty plane");
    RequireSameShape(planes_.front(), p, "ChannelStack");
  }
}

ChannelStack ChannelStack::Transposed() const {
  std::vector<ImagePlane> out;
  out.reserve(planes_.size());
  for (const auto& p : planes_) out.push_back(p.Transposed());
  return ChannelStack(std::move(out));
}

void RequireSameShape(const ImagePlane& a, const ImagePlane& b,
                      const char* where) {
  if (!a.SameShape(b)) {
    throw InvalidArgument(std::string(where) + ": dimension mismatch " +
                          std::to_string(a.width()) + "x" +
                          std::to_string(a.height()) + " vs " +
                          std::to_string(b.width()) + "x" +
                          std::to_string(b.height()));
  }
}

ImagePlane Add(const ImagePlane& a, const ImagePlane& b) {
  return Zip(a, b, "add", [](double x, double y) { return x + y; });
}

ImagePlane Sub(const ImagePlane& a, const ImagePlane& b) {
  return Zip(a, b, "sub", [](double x, double y) { return x - y; });
}

ImagePlane Mul(const ImagePlane& a, const ImagePlane& b) {
  return Zip(a, b, "mul", [](double x, double y) { return x * y; });
}

ImagePlane Div(const ImagePlane& a, const ImagePlane& b,
               std::optional<double> guard) {
  ValidateGuard(guard, "div");
  RequireSameShape(a, b, "div");
  if (!guard) {
    for (double v : b.data()) {
      if (v == 0.0) throw InvalidArgument("div: division by zero");
    }
  }
  ImagePlane out = Zip(a, b, "div", [guard](double x, double y) {
    return x / GuardedDivisor(y, guard, "div");
  });
  RequireFinite(out, "div");
  return out;
}

ImagePlane Scale(const ImagePlane& a, double s) {
  return Map(a, [s](double x) { return x * s; });
}

ImagePlane Offset(const ImagePlane& a, double s) {
  return Map(a, [s](double x) { return x + s; });
}

ImagePlane Power(const ImagePlane& a, int exponent) {
  if (exponent < 0) throw InvalidArgument("power: negative exponent");
  ImagePlane out = Map(a, [exponent](double x) {
    double r = 1.0;
    for (int k = 0; k < exponent; ++k) r *= x;
    return r;
  });
  RequireFinite(out, "power");
  return out;
}

ImagePlane Reciprocal(const ImagePlane& a, std::optional<double> guard) {
  ValidateGuard(guard, "reciprocal");
  if (!guard) {
    for (double v : a.data()) {
      if (v == 0.0) throw InvalidArgument("reciprocal: division by zero");
    }
  }
  ImagePlane out = Map(a, [guard](double x) {
    return 1.0 / GuardedDivisor(x, guard, "reciprocal");
  });
  RequireFinite(out, "reciprocal");
  return out;
}

ImagePlane Negate(const ImagePlane& a) {
  return Map(a, [](double x) { return -x; });
}

double MaxAbsDiff(const ImagePlane& a, const ImagePlane& b) {
  RequireSameShape(a, b, "MaxAbsDiff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace hgf
