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

#include "hgf/multilabel.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hgf/box_filter.h"
#include "hgf/gf_baseline.h"
#include "hgf/image_io.h"
#include "hgf/parallel.h"

namespace hgf {
namespace {

ImagePlane ChannelMean(const ChannelStack& s) {
  ImagePlane out(s.width(), s.height());
  for (std::size_t k = 0; k < out.size(); ++k) {
    double v = 0.0;
    for (const auto& p : s) v += p[k];
    out[k] = v / s.channels();
  }
  return out;
}

// Central difference with clamped neighbours.
ImagePlane GradientX(const ImagePlane& p) {
  const int w = p.width();
  ImagePlane out(w, p.height());
  for (int y = 0; y < p.height(); ++y) {
    for (int x = 0; x < w; ++x) {
      out(x, y) = 0.5 * (p(std::min(x + 1, w - 1), y) - p(std::max(x - 1, 0), y));
    }
  }
  return out;
}

int BinOf(double v) {
  const int b = static_cast<int>(std::floor(std::clamp(v, 0.0, 1.0) * kHistogramBins));
  return std::min(b, kHistogramBins - 1);
}

void RequireSeeds(const std::vector<PixelCoord>& seeds, const ChannelStack& img,
                  const char* which) {
  if (seeds.empty()) {
    throw InvalidArgument(std::string(which) + " seed set is empty");
  }
  for (const auto& s : seeds) {
    if (s.x < 0 || s.y < 0 || s.x >= img.width() || s.y >= img.height()) {
      throw InvalidArgument(std::string(which) + " seed (" +
                            std::to_string(s.x) + ", " + std::to_string(s.y) +
                            ") outside the image");
    }
  }
}

// Negative log-likelihood slice scaled into [0, 1].
ImagePlane HistogramCost(const ChannelStack& image,
                         const std::vector<PixelCoord>& seeds) {
  const int m = image.channels();
  std::vector<std::array<double, kHistogramBins>> hist(m);
  for (auto& h : hist) h.fill(1.0);
  for (const auto& s : seeds) {
    for (int c = 0; c < m; ++c) hist[c][BinOf(image[c](s.x, s.y))] += 1.0;
  }
  const double total = static_cast<double>(seeds.size()) + kHistogramBins;
  const double max_cost = m * std::log(total);
  ImagePlane out(image.width(), image.height());
  for (std::size_t k = 0; k < out.size(); ++k) {
    double cost = 0.0;
    for (int c = 0; c < m; ++c) {
      cost -= std::log(hist[c][BinOf(image[c][k])] / total);
    }
    out[k] = cost / max_cost;
  }
  return out;
}

}  // namespace

CostVolume::CostVolume(std::vector<ImagePlane> slices)
    : slices_(std::move(slices)) {
  if (slices_.size() < 2) throw InvalidArgument("cost volume needs >= 2 labels");
  for (const auto& s : slices_) {
    RequireSameShape(slices_.front(), s, "cost volume");
    if (!s.AllFinite()) throw InvalidArgument("cost volume is not finite");
  }
}

LabelMap::LabelMap(int width, int height, int label_count,
                   std::vector<int> labels)
    : width_(width), height_(height), label_count_(label_count),
      labels_(std::move(labels)) {
  if (width <= 0 || height <= 0 ||
      labels_.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgument("label map: bad dimensions");
  }
  for (int l : labels_) {
    if (l < 0 || l >= label_count_) throw InvalidArgument("label out of range");
  }
}

CostVolume BuildStereoCost(const ChannelStack& left, const ChannelStack& right,
                           int dmax, const StereoCostParams& params) {
  if (left.channels() != right.channels() || left.width() != right.width() ||
      left.height() != right.height()) {
    throw InvalidArgument("stereo: left and right images differ in shape");
  }
  if (dmax < 1) throw InvalidArgument("stereo: dmax must be >= 1");
  if (dmax >= left.width()) {
    throw InvalidArgument("stereo: dmax must be smaller than the image width");
  }
  const int w = left.width();
  const int h = left.height();
  const int m = left.channels();
  const ImagePlane grad_l = GradientX(ChannelMean(left));
  const ImagePlane grad_r = GradientX(ChannelMean(right));
  const double a = params.alpha;
  const double out_of_range =
      a * params.tau_color + (1.0 - a) * params.tau_grad;

  std::vector<ImagePlane> slices(dmax + 1, ImagePlane(w, h));
  ParallelFor(dmax + 1, [&](std::size_t lo, std::size_t hi) {
    for (int d = static_cast<int>(lo); d < static_cast<int>(hi); ++d) {
      ImagePlane& s = slices[d];
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          const int xr = x - d;
          if (xr < 0) {
            s(x, y) = out_of_range;
            continue;
          }
          double color = 0.0;
          for (int c = 0; c < m; ++c) color += std::abs(left[c](x, y) - right[c](xr, y));
          color /= m;
          const double grad = std::abs(grad_l(x, y) - grad_r(xr, y));
          s(x, y) = a * std::min(color, params.tau_color) +
                    (1.0 - a) * std::min(grad, params.tau_grad);
        }
      }
    }
  });
  return CostVolume(std::move(slices));
}

CostVolume BuildSegmentationCost(const ChannelStack& image,
                                 const std::vector<PixelCoord>& fg_seeds,
                                 const std::vector<PixelCoord>& bg_seeds) {
  RequireSeeds(fg_seeds, image, "foreground");
  RequireSeeds(bg_seeds, image, "background");
  std::vector<ImagePlane> slices(2);
  slices[kBackgroundLabel] = HistogramCost(image, bg_seeds);
  slices[kForegroundLabel] = HistogramCost(image, fg_seeds);
  return CostVolume(std::move(slices));
}

AggregationMethod ParseAggregationMethod(const std::string& name) {
  if (name == "none") return AggregationMethod::kNone;
  if (name == "box") return AggregationMethod::kBox;
  if (name == "gf") return AggregationMethod::kGf;
  if (name == "hgf") return AggregationMethod::kHgf;
  throw InvalidArgument("unknown aggregation method '" + name + "'");
}

CostVolume FilterVolume(const CostVolume& volume, const ChannelStack& guidance,
                        const FilterParams& params, AggregationMethod method) {
  if (guidance.width() != volume.width() ||
      guidance.height() != volume.height()) {
    throw InvalidArgument("filter volume: guidance does not match slices");
  }
  std::vector<ImagePlane> out;
  out.reserve(volume.labels());
  switch (method) {
    case AggregationMethod::kNone:
      return volume;
    case AggregationMethod::kBox:
      for (const auto& s : volume.slices()) {
        out.push_back(BoxAverage(s, params.window));
      }
      break;
    case AggregationMethod::kGf:
      for (const auto& s : volume.slices()) {
        out.push_back(GfFilter(s, guidance, params.window.radius(), params.lambda));
      }
      break;
    case AggregationMethod::kHgf: {
      const PreparedGuidance prepared(
          SynthesizePolynomialGuidance(guidance, params.poly), params.lambda,
          params.window);
      for (const auto& s : volume.slices()) out.push_back(prepared.Filter(s));
      break;
    }
  }
  return CostVolume(std::move(out));
}

LabelMap WinnerTakesAll(const CostVolume& volume) {
  const int w = volume.width();
  const int h = volume.height();
  std::vector<int> labels(static_cast<std::size_t>(w) * h, 0);
  ParallelFor(labels.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      int best = 0;
      double best_cost = volume[0][k];
      for (int l = 1; l < volume.labels(); ++l) {
        if (volume[l][k] < best_cost) {
          best_cost = volume[l][k];
          best = l;
        }
      }
      labels[k] = best;
    }
  });
  return LabelMap(w, h, volume.labels(), std::move(labels));
}

double BadPixelFraction(const LabelMap& labels, const DisparityTruth& truth,
                        double threshold) {
  if (labels.width() != truth.disparity.width() ||
      labels.height() != truth.disparity.height() ||
      truth.valid.size() != truth.disparity.size()) {
    throw InvalidArgument("pbp: label map and truth differ in shape");
  }
  std::size_t evaluated = 0;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < truth.valid.size(); ++k) {
    if (!truth.valid[k]) continue;
    ++evaluated;
    if (std::abs(labels.labels()[k] - truth.disparity[k]) > threshold) ++bad;
  }
  if (evaluated == 0) throw InvalidArgument("pbp: evaluation mask is empty");
  return static_cast<double>(bad) / static_cast<double>(evaluated);
}

DisparityTruth LoadDisparityTruth(const std::string& truth_path, double scale,
                                  const std::optional<std::string>& mask_path) {
  if (!(scale > 0.0)) throw InvalidArgument("disparity scale must be > 0");
  const ChannelStack gt = LoadImage(truth_path);
  if (gt.channels() != 1) throw IoError(truth_path + ": expected a PGM");
  ImagePlane disparity(gt.width(), gt.height());
  for (std::size_t k = 0; k < disparity.size(); ++k) {
    disparity[k] = std::round(gt[0][k] * 255.0) / scale;
  }
  std::vector<bool> valid(disparity.size(), true);
  if (mask_path) {
    const ChannelStack mask = LoadImage(*mask_path);
    if (mask.channels() != 1 || !mask.SameShape(disparity)) {
      throw IoError(*mask_path + ": mask must be a PGM matching the truth");
    }
    for (std::size_t k = 0; k < valid.size(); ++k) {
      valid[k] = std::round(mask[0][k] * 255.0) == 255.0;
    }
  }
  return DisparityTruth{std::move(disparity), std::move(valid)};
}

void SaveDisparityTruth(const DisparityTruth& truth, const std::string& path,
                        double scale,
                        const std::optional<std::string>& mask_path) {
  ImagePlane bytes(truth.disparity.width(), truth.disparity.height());
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    bytes[k] = std::clamp(std::round(truth.disparity[k] * scale), 0.0, 255.0) / 255.0;
  }
  SaveImage(ChannelStack({bytes}), path, ImageFormat::kPgm);
  if (mask_path) {
    ImagePlane mask(bytes.width(), bytes.height());
    for (std::size_t k = 0; k < mask.size(); ++k) mask[k] = truth.valid[k] ? 1.0 : 0.0;
    SaveImage(ChannelStack({mask}), *mask_path, ImageFormat::kPgm);
  }
}

void SaveLabelMap(const LabelMap& labels, const std::string& path,
                  double scale) {
  ImagePlane bytes(labels.width(), labels.height());
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    bytes[k] = std::clamp(std::round(labels.labels()[k] * scale), 0.0, 255.0) / 255.0;
  }
  SaveImage(ChannelStack({bytes}), path, ImageFormat::kPgm);
}

std::vector<PixelCoord> LoadSeeds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open seed file '" + path + "'");
  std::vector<PixelCoord> seeds;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    PixelCoord p;
    std::string rest;
    if (!(ss >> p.x >> p.y) || (ss >> rest)) {
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": expected 'x y'");
    }
    seeds.push_back(p);
  }
  return seeds;
}

void SaveSeeds(const std::vector<PixelCoord>& seeds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open seed file '" + path + "' for writing");
  for (const auto& s : seeds) out << s.x << ' ' << s.y << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace hgf
