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

// hgf: command-line front end for filtering, cost-volume labelling,
// benchmarking and the curve-fitting demo.
//
// Exit codes: 0 success, 1 bad arguments, 2 I/O failure, 3 numerical
// degeneracy.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgf/bench.h"
#include "hgf/box_filter.h"
#include "hgf/engine.h"
#include "hgf/error.h"
#include "hgf/fitdemo.h"
#include "hgf/fixtures.h"
#include "hgf/gf_baseline.h"
#include "hgf/image_io.h"
#include "hgf/multilabel.h"
#include "hgf/parallel.h"

namespace hgf {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDegenerate = 3;

struct FilterFlags {
  std::string method = "hgf";
  int radius = FilterParams::kDefaultRadius;
  double lambda = FilterParams::kDefaultLambda;
  int degree = PolynomialSpec::kDefaultDegree;

  FilterParams Params() const { return FilterParams::Make(lambda, radius, degree); }
};

void AddFilterFlags(CLI::App* cmd, FilterFlags& f,
                    const std::vector<std::string>& methods) {
  cmd->add_option("--method", f.method, "Filter / aggregation method")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  cmd->add_option("--radius", f.radius, "Window radius r (side 2r+1)")
      ->capture_default_str();
  cmd->add_option("--lambda", f.lambda, "Regularization weight")
      ->capture_default_str();
  cmd->add_option("--degree", f.degree, "Polynomial guidance degree")
      ->capture_default_str();
}

ImageFormat OutputFormat(const std::string& path) {
  try {
    return FormatFromPath(path);
  } catch (const InvalidArgument&) {
    return ImageFormat::kPfm;
  }
}

void PrintTimes(const StageTimes& t, int channel) {
  std::printf(
      "channel %d: gram %.3f ms, alpha %.3f ms, weights %.3f ms, aggregate "
      "%.3f ms, total %.3f ms\n",
      channel, t.gram_ms, t.alpha_ms, t.weights_ms, t.aggregate_ms, t.total_ms);
}

// ---------------------------------------------------------------- filter

struct FilterCommand {
  std::string input;
  std::string guidance;
  std::string out = "filtered.pfm";
  FilterFlags flags;

  int Run() const {
    const FilterParams params = flags.Params();
    const ChannelStack in = LoadImage(input);
    const ChannelStack guide = guidance.empty() ? in : LoadImage(guidance);
    if (guide.width() != in.width() || guide.height() != in.height()) {
      throw InvalidArgument("input and guidance dimensions differ");
    }
    std::vector<ImagePlane> result;
    for (int c = 0; c < in.channels(); ++c) {
      if (flags.method == "box") {
        result.push_back(BoxAverage(in[c], params.window));
        continue;
      }
      if (flags.method == "gf" && guide.channels() != 1 && guide.channels() != 3) {
        throw InvalidArgument("gf needs a gray or color guidance image");
      }
      const FilterResult r =
          flags.method == "hgf"
              ? HgfFilterTimed(in[c], guide, params)
              : GfFilterTimed(in[c], guide, params.window, params.lambda);
      PrintTimes(r.times, c);
      result.push_back(r.output);
    }
    SaveImage(ChannelStack(std::move(result)), out, OutputFormat(out));
    std::printf("wrote %s\n", out.c_str());
    return kExitOk;
  }
};

// ---------------------------------------------------------------- stereo

struct StereoCommand {
  std::string left;
  std::string right;
  int dmax = 0;
  std::string gt;
  std::string mask;
  double scale = kFixtureDisparityScale;
  std::string out = "disparity.pgm";
  FilterFlags flags;

  int Run() const {
    if (dmax < 1) throw InvalidArgument("--dmax must be >= 1");
    const ChannelStack l = LoadImage(left);
    const ChannelStack r = LoadImage(right);
    const CostVolume cost = BuildStereoCost(l, r, dmax);
    const LabelMap labels = WinnerTakesAll(FilterVolume(
        cost, l, flags.Params(), ParseAggregationMethod(flags.method)));
    SaveLabelMap(labels, out, scale);
    std::printf("wrote %s\n", out.c_str());
    if (!gt.empty()) {
      const DisparityTruth truth = LoadDisparityTruth(
          gt, scale, mask.empty() ? std::nullopt : std::optional<std::string>(mask));
      std::printf("PBP %.6f\n", BadPixelFraction(labels, truth));
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- segment

struct SegmentCommand {
  std::string image;
  std::string fg_seeds;
  std::string bg_seeds;
  std::string truth;
  std::string out = "segmentation.pgm";
  FilterFlags flags;

  int Run() const {
    const FilterParams params = flags.Params();
    const ChannelStack img = LoadImage(image);
    const CostVolume cost =
        BuildSegmentationCost(img, LoadSeeds(fg_seeds), LoadSeeds(bg_seeds));
    const LabelMap labels = WinnerTakesAll(
        FilterVolume(cost, img, params, ParseAggregationMethod(flags.method)));
    SaveLabelMap(labels, out, 255.0);
    std::printf("wrote %s\n", out.c_str());
    if (!truth.empty()) {
      const ChannelStack t = LoadImage(truth);
      if (t.channels() != 1 || !t.SameShape(ImagePlane(labels.width(), labels.height()))) {
        throw IoError(truth + ": truth must be a PGM matching the image");
      }
      std::size_t wrong = 0;
      for (std::size_t k = 0; k < t[0].size(); ++k) {
        const int expect = t[0][k] >= 0.5 ? kForegroundLabel : kBackgroundLabel;
        if (labels.labels()[k] != expect) ++wrong;
      }
      std::printf("mislabelled %zu of %zu\n", wrong, t[0].size());
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- bench

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw InvalidArgument("empty list '" + s + "'");
  return out;
}

int ParseInt(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidArgument("not an integer: '" + s + "'");
  return v;
}

struct BenchCommand {
  std::string sizes = "256x256,512x512";
  std::string channels = "1,3,5";
  std::string methods = "hgf,gf,naive-gf";
  std::string out = "bench.csv";
  BenchConfig config;

  int Run() {
    config.sizes.clear();
    for (const auto& s : SplitList(sizes)) {
      const auto x = s.find('x');
      if (x == std::string::npos) throw InvalidArgument("size must be WxH: '" + s + "'");
      const int w = ParseInt(s.substr(0, x));
      const int h = ParseInt(s.substr(x + 1));
      if (w < 1 || h < 1) throw InvalidArgument("size must be positive: '" + s + "'");
      config.sizes.emplace_back(w, h);
    }
    config.channels.clear();
    for (const auto& c : SplitList(channels)) config.channels.push_back(ParseInt(c));
    config.methods = SplitList(methods);
    const auto records = RunBenchmark(config);
    std::ofstream file(out);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    WriteBenchCsv(records, file);
    if (!file) throw IoError("failed writing '" + out + "'");
    WriteBenchCsv(records, std::cout);
    return kExitOk;
  }
};

// ---------------------------------------------------------------- fitdemo

struct FitDemoCommand {
  FitDemoConfig config;
  std::string out = "fit.csv";

  int Run() const {
    const FitDemoResult r = RunFitDemo(config);
    std::ofstream file(out);
    if (!file) throw IoError("cannot open '" + out + "' for writing");
    WriteFitCsv(r, file);
    if (!file) throw IoError("failed writing '" + out + "'");
    std::printf("RMS linear %.9f\nRMS degree-%d %.9f\n", r.rms_linear,
                config.degree, r.rms_poly);
    return kExitOk;
  }
};

int Main(int argc, char** argv) {
  CLI::App app{"Guided filtering with box-filter ridge regression"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  int threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  FilterCommand filter;
  CLI::App* filter_cmd = app.add_subcommand("filter", "Filter an image");
  filter_cmd->add_option("--input", filter.input, "Input image")->required();
  filter_cmd->add_option("--guidance", filter.guidance,
                         "Guidance image (defaults to the input)");
  filter_cmd->add_option("--out", filter.out, "Output path (.pfm unless .pgm/.ppm)")
      ->capture_default_str();
  AddFilterFlags(filter_cmd, filter.flags, {"hgf", "gf", "box"});

  StereoCommand stereo;
  CLI::App* stereo_cmd = app.add_subcommand("stereo", "Stereo matching by cost filtering");
  stereo_cmd->add_option("--left", stereo.left, "Left image")->required();
  stereo_cmd->add_option("--right", stereo.right, "Right image")->required();
  stereo_cmd->add_option("--dmax", stereo.dmax, "Largest disparity")->required();
  stereo_cmd->add_option("--gt", stereo.gt, "Ground-truth disparity PGM");
  stereo_cmd->add_option("--mask", stereo.mask, "Evaluation mask PGM (255 = evaluated)");
  stereo_cmd->add_option("--scale", stereo.scale, "Disparity byte scale")
      ->capture_default_str();
  stereo_cmd->add_option("--out", stereo.out, "Disparity map PGM")->capture_default_str();
  AddFilterFlags(stereo_cmd, stereo.flags, {"none", "box", "gf", "hgf"});

  SegmentCommand segment;
  CLI::App* segment_cmd = app.add_subcommand("segment", "Two-label segmentation from seeds");
  segment_cmd->add_option("--image", segment.image, "Input image")->required();
  segment_cmd->add_option("--fg-seeds", segment.fg_seeds, "Foreground seed file")->required();
  segment_cmd->add_option("--bg-seeds", segment.bg_seeds, "Background seed file")->required();
  segment_cmd->add_option("--truth", segment.truth, "Reference mask PGM (255 = foreground)");
  segment_cmd->add_option("--out", segment.out, "Label map PGM")->capture_default_str();
  AddFilterFlags(segment_cmd, segment.flags, {"none", "box", "gf", "hgf"});

  BenchCommand bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Stage timing benchmark");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated WxH list")
      ->capture_default_str();
  bench_cmd->add_option("--channels", bench.channels, "Comma-separated channel counts")
      ->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "hgf, gf, naive-gf, direct")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV report")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.config.repeats, "Timed runs (median kept)")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.config.seed, "Input seed")->capture_default_str();
  bench_cmd->add_option("--radius", bench.config.radius, "Window radius")
      ->capture_default_str();
  bench_cmd->add_option("--lambda", bench.config.lambda, "Regularization weight")
      ->capture_default_str();

  FitDemoCommand fit;
  CLI::App* fit_cmd = app.add_subcommand("fitdemo", "Linear vs polynomial curve fit");
  fit_cmd->add_option("--degree", fit.config.degree, "Polynomial degree")
      ->capture_default_str();
  fit_cmd->add_option("--seed", fit.config.seed, "Noise seed")->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "CSV with both fitted curves")
      ->capture_default_str();

  std::string fixture_dir = "data/fixtures";
  CLI::App* fixtures_cmd =
      app.add_subcommand("make-fixtures", "Write the synthetic stereo and segmentation scenes");
  fixtures_cmd->add_option("--out", fixture_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    SetMaxThreads(threads);
    if (*filter_cmd) return filter.Run();
    if (*stereo_cmd) return stereo.Run();
    if (*segment_cmd) return segment.Run();
    if (*bench_cmd) return bench.Run();
    if (*fit_cmd) return fit.Run();
    if (*fixtures_cmd) {
      WriteFixtureFiles(fixture_dir);
      std::printf("wrote fixtures to %s\n", fixture_dir.c_str());
      return kExitOk;
    }
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return kExitIo;
  } catch (const NumericalDegeneracy& e) {
    std::fprintf(stderr, "numerical degeneracy: %s\n", e.what());
    return kExitDegenerate;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace hgf

int main(int argc, char** argv) { return hgf::Main(argc, argv); }
