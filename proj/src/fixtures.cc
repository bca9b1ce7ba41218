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

#include "hgf/fixtures.h"

#include <algorithm>
#include <filesystem>

#include "hgf/image_io.h"

namespace hgf {
namespace {

struct Rect {
  int x0, y0, x1, y1;
  bool Contains(int x, int y) const {
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  }
};

std::vector<double> Texture(int width, int height, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(static_cast<std::size_t>(width) * height);
  for (auto& v : t) v = u(rng);
  return t;
}

}  // namespace

ImagePlane RandomPlane(int width, int height, std::mt19937_64& rng, double lo,
                       double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  ImagePlane p(width, height);
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = u(rng);
  return p;
}

ChannelStack RandomStack(int channels, int width, int height,
                         std::mt19937_64& rng) {
  std::vector<ImagePlane> planes;
  for (int c = 0; c < channels; ++c) {
    planes.push_back(RandomPlane(width, height, rng));
  }
  return ChannelStack(std::move(planes));
}

StereoScene MakeStereoScene(std::uint64_t seed) {
  constexpr int kW = 128;
  constexpr int kH = 96;
  constexpr int kBgDisp = 2;
  constexpr int kFgDisp = 6;
  constexpr double kNoise = 0.015;
  const Rect rect{40, 28, 88, 68};
  const double bg_base[3] = {0.15, 0.30, 0.45};
  const double bg_gain[3] = {0.25, 0.30, 0.40};
  const double fg_base[3] = {0.55, 0.25, 0.15};
  const double fg_gain[3] = {0.35, 0.20, 0.15};

  std::mt19937_64 rng(seed);
  // Textures are indexed by left-image coordinates; the padding covers the
  // background seen through the right view.
  const int tex_w = kW + kFgDisp;
  const std::vector<double> tb = Texture(tex_w, kH, rng);
  const std::vector<double> tf = Texture(tex_w, kH, rng);
  auto bg = [&](int c, int xl, int y) {
    return bg_base[c] + bg_gain[c] * tb[static_cast<std::size_t>(y) * tex_w + xl];
  };
  auto fg = [&](int c, int xl, int y) {
    return fg_base[c] + fg_gain[c] * tf[static_cast<std::size_t>(y) * tex_w + xl];
  };

  std::normal_distribution<double> noise(0.0, kNoise);
  std::vector<ImagePlane> left(3, ImagePlane(kW, kH));
  std::vector<ImagePlane> right(3, ImagePlane(kW, kH));
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < kH; ++y) {
      for (int x = 0; x < kW; ++x) {
        const double l = rect.Contains(x, y) ? fg(c, x, y) : bg(c, x, y);
        const double r = rect.Contains(x + kFgDisp, y) ? fg(c, x + kFgDisp, y)
                                                       : bg(c, x + kBgDisp, y);
        left[c](x, y) = std::clamp(l + noise(rng), 0.0, 1.0);
        right[c](x, y) = std::clamp(r + noise(rng), 0.0, 1.0);
      }
    }
  }

  ImagePlane disparity(kW, kH);
  std::vector<bool> valid(disparity.size());
  for (int y = 0; y < kH; ++y) {
    for (int x = 0; x < kW; ++x) {
      const bool in_fg = rect.Contains(x, y);
      const int d = in_fg ? kFgDisp : kBgDisp;
      disparity(x, y) = d;
      // A background point is hidden in the right view when the shifted
      // rectangle covers its match.
      const bool occluded = !in_fg && rect.Contains(x - kBgDisp + kFgDisp, y);
      valid[static_cast<std::size_t>(y) * kW + x] = x - d >= 0 && !occluded;
    }
  }
  return StereoScene{ChannelStack(std::move(left)),
                     ChannelStack(std::move(right)),
                     DisparityTruth{std::move(disparity), std::move(valid)}, 8};
}

StereoScene MakeShiftedRectangleScene(std::uint64_t seed) {
  constexpr int kW = 64;
  constexpr int kH = 48;
  constexpr int kShift = 4;
  constexpr double kBackground = 0.5;
  const Rect rect{24, 16, 48, 32};

  std::mt19937_64 rng(seed);
  const std::vector<double> t = Texture(kW, kH, rng);
  auto tex = [&](int x, int y) {
    return 0.05 + 0.35 * t[static_cast<std::size_t>(y) * kW + x];
  };
  ImagePlane left(kW, kH, kBackground);
  ImagePlane right(kW, kH, kBackground);
  ImagePlane disparity(kW, kH);
  std::vector<bool> valid(left.size(), false);
  for (int y = 0; y < kH; ++y) {
    for (int x = 0; x < kW; ++x) {
      if (rect.Contains(x, y)) {
        left(x, y) = tex(x, y);
        disparity(x, y) = kShift;
        valid[static_cast<std::size_t>(y) * kW + x] = true;
      }
      if (rect.Contains(x + kShift, y)) right(x, y) = tex(x + kShift, y);
    }
  }
  return StereoScene{ChannelStack({left}), ChannelStack({right}),
                     DisparityTruth{std::move(disparity), std::move(valid)}, 8};
}

SegmentationScene MakeSegmentationScene() {
  constexpr int kSize = 64;
  constexpr int kCx = 32;
  constexpr int kCy = 30;
  constexpr int kRadius = 16;
  const double fg_color[3] = {0.85, 0.35, 0.20};
  const double bg_color[3] = {0.15, 0.45, 0.75};

  std::vector<ImagePlane> planes(3, ImagePlane(kSize, kSize));
  std::vector<int> truth(static_cast<std::size_t>(kSize) * kSize);
  for (int y = 0; y < kSize; ++y) {
    for (int x = 0; x < kSize; ++x) {
      const int dx = x - kCx;
      const int dy = y - kCy;
      const bool in_fg = dx * dx + dy * dy <= kRadius * kRadius;
      for (int c = 0; c < 3; ++c) planes[c](x, y) = in_fg ? fg_color[c] : bg_color[c];
      truth[static_cast<std::size_t>(y) * kSize + x] =
          in_fg ? kForegroundLabel : kBackgroundLabel;
    }
  }
  return SegmentationScene{ChannelStack(std::move(planes)),
                           {PixelCoord{kCx, kCy}},
                           {PixelCoord{4, 4}},
                           std::move(truth)};
}

void WriteFixtureFiles(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };

  const StereoScene stereo = MakeStereoScene();
  SaveImage(stereo.left, path("stereo_left.ppm"), ImageFormat::kPpm);
  SaveImage(stereo.right, path("stereo_right.ppm"), ImageFormat::kPpm);
  SaveDisparityTruth(stereo.truth, path("stereo_gt.pgm"),
                     kFixtureDisparityScale, path("stereo_mask.pgm"));

  const SegmentationScene seg = MakeSegmentationScene();
  SaveImage(seg.image, path("seg_image.ppm"), ImageFormat::kPpm);
  SaveSeeds(seg.fg_seeds, path("seg_fg.txt"));
  SaveSeeds(seg.bg_seeds, path("seg_bg.txt"));
  SaveLabelMap(LabelMap(seg.image.width(), seg.image.height(), 2, seg.truth),
               path("seg_truth.pgm"), 255.0);
}

}  // namespace hgf
