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

#include "hgf/box_filter.h"

#include <algorithm>
#include <string>

#include "hgf/parallel.h"

namespace hgf {

WindowSpec::WindowSpec(int radius) : radius_(radius) {
  if (radius < 1) {
    throw InvalidArgument("window radius must be >= 1, got " +
                          std::to_string(radius));
  }
}

WindowBounds ClippedWindow(int width, int height, WindowSpec window, int x,
                           int y) {
  const int r = window.radius();
  return {std::max(0, x - r), std::max(0, y - r), std::min(width, x + r + 1),
          std::min(height, y + r + 1)};
}

SummedAreaTable::SummedAreaTable(const ImagePlane& plane)
    : width_(plane.width()), height_(plane.height()) {
  if (!plane.AllFinite()) throw InvalidArgument("SAT input is not finite");
  const std::size_t stride = static_cast<std::size_t>(width_) + 1;
  table_.assign(stride * (static_cast<std::size_t>(height_) + 1), 0.0);
  for (int y = 1; y <= height_; ++y) {
    const double* up = &table_[(y - 1) * stride];
    double* row = &table_[y * stride];
    for (int x = 1; x <= width_; ++x) {
      row[x] = ((row[x - 1] + up[x]) - up[x - 1]) + plane(x - 1, y - 1);
    }
  }
}

namespace {

void SumRows(const SummedAreaTable& sat, WindowSpec window, int y0, int y1,
             ImagePlane& out) {
  const int w = sat.width();
  const int h = sat.height();
  for (int y = y0; y < y1; ++y) {
    for (int x = 0; x < w; ++x) {
      out(x, y) = sat.RectSum(ClippedWindow(w, h, window, x, y));
    }
  }
}

}  // namespace

ImagePlane BoxSum(const ImagePlane& plane, WindowSpec window) {
  const SummedAreaTable sat(plane);
  ImagePlane out(plane.width(), plane.height());
  ParallelFor(plane.height(), [&](std::size_t lo, std::size_t hi) {
    SumRows(sat, window, static_cast<int>(lo), static_cast<int>(hi), out);
  });
  return out;
}

namespace internal {

ImagePlane BoxSumSerial(const ImagePlane& plane, WindowSpec window) {
  const SummedAreaTable sat(plane);
  ImagePlane out(plane.width(), plane.height());
  SumRows(sat, window, 0, plane.height(), out);
  return out;
}

}  // namespace internal

ImagePlane WindowCounts(int width, int height, WindowSpec window) {
  ImagePlane out(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      out(x, y) = ClippedWindow(width, height, window, x, y).count();
    }
  }
  return out;
}

ImagePlane BoxAverage(const ImagePlane& plane, WindowSpec window) {
  const SummedAreaTable sat(plane);
  const int w = plane.width();
  const int h = plane.height();
  ImagePlane out(w, h);
  ParallelFor(h, [&](std::size_t lo, std::size_t hi) {
    for (int y = static_cast<int>(lo); y < static_cast<int>(hi); ++y) {
      for (int x = 0; x < w; ++x) {
        const WindowBounds b = ClippedWindow(w, h, window, x, y);
        out(x, y) = sat.RectSum(b) / b.count();
      }
    }
  });
  return out;
}

}  // namespace hgf
