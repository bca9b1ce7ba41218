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

// Seeded synthetic inputs: random planes for tests and benchmarks, plus the
// stereo and segmentation scenes with known answers.

#ifndef HGF_FIXTURES_H_
#define HGF_FIXTURES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hgf/image.h"
#include "hgf/multilabel.h"

namespace hgf {

// Uniform values in [lo, hi).
ImagePlane RandomPlane(int width, int height, std::mt19937_64& rng,
                       double lo = 0.0, double hi = 1.0);
ChannelStack RandomStack(int channels, int width, int height,
                         std::mt19937_64& rng);

struct StereoScene {
  ChannelStack left;
  ChannelStack right;
  DisparityTruth truth;  // in left-image coordinates
  int dmax = 8;
};

// 128x96 color pair: textured background at disparity 2 and a differently
// colored textured rectangle at disparity 6, with Gaussian noise (sigma 0.015). The
// mask excludes pixels whose match is occluded or outside the right image.
StereoScene MakeStereoScene(std::uint64_t seed = 2026);

// 64x48 gray pair: constant background and a textured 24x16 rectangle
// shifted by 4 px. Only the rectangle is marked valid in the truth.
StereoScene MakeShiftedRectangleScene(std::uint64_t seed = 11);

struct SegmentationScene {
  ChannelStack image;
  std::vector<PixelCoord> fg_seeds;
  std::vector<PixelCoord> bg_seeds;
  std::vector<int> truth;  // row-major, kForegroundLabel / kBackgroundLabel
};

// 64x64 image with two flat colors: a disc (foreground) on a background,
// one seed pixel per region.
SegmentationScene MakeSegmentationScene();

// Scale used for the bundled disparity PGMs (byte = disparity * scale).
inline constexpr double kFixtureDisparityScale = 16.0;

// Writes stereo_left.ppm, stereo_right.ppm, stereo_gt.pgm, stereo_mask.pgm,
// seg_image.ppm, seg_fg.txt, seg_bg.txt and seg_truth.pgm into dir.
void WriteFixtureFiles(const std::string& dir);

}  // namespace hgf

#endif  // HGF_FIXTURES_H_
