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

#ifndef HGF_IMAGE_H_
#define HGF_IMAGE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hgf/error.h"

namespace hgf {

// Single-channel image of doubles, row-major (index = y * width + x).
class ImagePlane {
 public:
  ImagePlane() = default;
  ImagePlane(int width, int height, double fill = 0.0);
  // Throws InvalidArgument if data.size() != width * height or any value is
  // not finite.
  ImagePlane(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool SameShape(const ImagePlane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  double operator()(int x, int y) const {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double& operator()(int x, int y) {
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }
  const std::vector<double>& values() const { return data_; }

  bool AllFinite() const;
  ImagePlane Transposed() const;

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

// Non-empty ordered list of planes with identical dimensions.
class ChannelStack {
 public:
  ChannelStack() = default;
  explicit ChannelStack(std::vector<ImagePlane> planes);
  ChannelStack(std::initializer_list<ImagePlane> planes)
      : ChannelStack(std::vector<ImagePlane>(planes)) {}

  int channels() const { return static_cast<int>(planes_.size()); }
  int width() const { return planes_.empty() ? 0 : planes_.front().width(); }
  int height() const { return planes_.empty() ? 0 : planes_.front().height(); }
  bool empty() const { return planes_.empty(); }

  const ImagePlane& operator[](int i) const { return planes_[i]; }
  const std::vector<ImagePlane>& planes() const { return planes_; }
  auto begin() const { return planes_.begin(); }
  auto end() const { return planes_.end(); }

  bool SameShape(const ImagePlane& p) const {
    return !empty() && planes_.front().SameShape(p);
  }
  ChannelStack Transposed() const;

  friend bool operator==(const ChannelStack&, const ChannelStack&) = default;

 private:
  std::vector<ImagePlane> planes_;
};

// Throws InvalidArgument unless a and b have the same dimensions.
void RequireSameShape(const ImagePlane& a, const ImagePlane& b,
                      const char* where);

// Element-wise plane arithmetic. Each result element depends only on the
// matching input elements, so evaluation order never changes a value.
ImagePlane Add(const ImagePlane& a, const ImagePlane& b);
ImagePlane Sub(const ImagePlane& a, const ImagePlane& b);
ImagePlane Mul(const ImagePlane& a, const ImagePlane& b);
// Without a guard, any zero in b is an error. With a guard g > 0, divisors
// with |b| < g are replaced by g carrying the sign of b (zero maps to +g).
ImagePlane Div(const ImagePlane& a, const ImagePlane& b,
               std::optional<double> guard = std::nullopt);
ImagePlane Scale(const ImagePlane& a, double s);
ImagePlane Offset(const ImagePlane& a, double s);
// Integer power by repeated multiplication; exponent >= 0.
ImagePlane Power(const ImagePlane& a, int exponent);
ImagePlane Reciprocal(const ImagePlane& a,
                      std::optional<double> guard = std::nullopt);
ImagePlane Negate(const ImagePlane& a);

inline ImagePlane operator+(const ImagePlane& a, const ImagePlane& b) {
  return Add(a, b);
}
inline ImagePlane operator-(const ImagePlane& a, const ImagePlane& b) {
  return Sub(a, b);
}
inline ImagePlane operator*(const ImagePlane& a, const ImagePlane& b) {
  return Mul(a, b);
}
inline ImagePlane operator*(double s, const ImagePlane& a) {
  return Scale(a, s);
}
inline ImagePlane operator-(const ImagePlane& a) { return Negate(a); }

double MaxAbsDiff(const ImagePlane& a, const ImagePlane& b);

}  // namespace hgf

#endif  // HGF_IMAGE_H_
