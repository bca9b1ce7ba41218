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

// Box sums and box means over (2r+1)x(2r+1) windows clipped at the image
// border, evaluated in O(1) per pixel from a summed-area table.

#ifndef HGF_BOX_FILTER_H_
#define HGF_BOX_FILTER_H_

#include <vector>

#include "hgf/image.h"

namespace hgf {

class WindowSpec {
 public:
  // Throws InvalidArgument unless radius >= 1.
  explicit WindowSpec(int radius);
  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }

 private:
  int radius_;
};

// Half-open clipped window bounds [x0, x1) x [y0, y1) around (x, y).
struct WindowBounds {
  int x0, y0, x1, y1;
  int count() const { return (x1 - x0) * (y1 - y0); }
};
WindowBounds ClippedWindow(int width, int height, WindowSpec window, int x,
                           int y);

// (width+1) x (height+1) table; at(x, y) is the sum over rows < y and
// columns < x. Built with the recurrence
//   S(x,y) = ((S(x-1,y) + S(x,y-1)) - S(x-1,y-1)) + v(x-1,y-1)
// in row-major order. Both the recurrence and RectSum are symmetric in the
// two axes, so a transposed plane yields the bit-exact transposed table.
class SummedAreaTable {
 public:
  explicit SummedAreaTable(const ImagePlane& plane);

  int width() const { return width_; }    // plane width
  int height() const { return height_; }  // plane height
  double at(int x, int y) const {
    return table_[static_cast<std::size_t>(y) * (width_ + 1) + x];
  }
  double Total() const { return at(width_, height_); }
  double RectSum(const WindowBounds& b) const {
    return (at(b.x1, b.y1) + at(b.x0, b.y0)) - (at(b.x1, b.y0) + at(b.x0, b.y1));
  }

 private:
  int width_;
  int height_;
  std::vector<double> table_;
};

ImagePlane BoxSum(const ImagePlane& plane, WindowSpec window);
// BoxSum divided by the clipped window pixel count.
ImagePlane BoxAverage(const ImagePlane& plane, WindowSpec window);
// The clipped window pixel count |window(p)| per pixel (box sum of ones).
ImagePlane WindowCounts(int width, int height, WindowSpec window);

namespace internal {
// Single-threaded BoxSum for callers that already parallelize over planes.
ImagePlane BoxSumSerial(const ImagePlane& plane, WindowSpec window);
}  // namespace internal

}  // namespace hgf

#endif  // HGF_BOX_FILTER_H_
