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

// Python bindings. Images cross the boundary as float64 numpy arrays shaped
// (height, width) for one channel or (height, width, channels) for several.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <string>
#include <vector>

#include "hgf/box_filter.h"
#include "hgf/engine.h"
#include "hgf/error.h"
#include "hgf/gf_baseline.h"
#include "hgf/guidance.h"
#include "hgf/multilabel.h"
#include "hgf/parallel.h"
#include "hgf/ridge_oracle.h"

namespace py = pybind11;

namespace hgf {
namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ImagePlane ToPlane(const Array& a) {
  if (a.ndim() != 2) throw InvalidArgument("expected a 2-D array");
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  return ImagePlane(w, h, std::vector<double>(a.data(), a.data() + a.size()));
}

ChannelStack ToStack(const Array& a) {
  if (a.ndim() == 2) return ChannelStack({ToPlane(a)});
  if (a.ndim() != 3) throw InvalidArgument("expected a 2-D or 3-D array");
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  const int c = static_cast<int>(a.shape(2));
  auto v = a.unchecked<3>();
  std::vector<ImagePlane> planes(c, ImagePlane(w, h));
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int k = 0; k < c; ++k) planes[k](x, y) = v(y, x, k);
    }
  }
  return ChannelStack(std::move(planes));
}

Array FromPlane(const ImagePlane& p) {
  Array out({p.height(), p.width()});
  std::memcpy(out.mutable_data(), p.values().data(), p.size() * sizeof(double));
  return out;
}

Array FromStack(const ChannelStack& s) {
  Array out({s.height(), s.width(), s.channels()});
  auto v = out.mutable_unchecked<3>();
  for (int k = 0; k < s.channels(); ++k) {
    for (int y = 0; y < s.height(); ++y) {
      for (int x = 0; x < s.width(); ++x) v(y, x, k) = s[k](x, y);
    }
  }
  return out;
}

// Guidance defaults to the input itself.
ChannelStack GuidanceOr(const Array& input, const py::object& guidance) {
  return guidance.is_none() ? ToStack(input) : ToStack(guidance.cast<Array>());
}

Array VolumeToArray(const CostVolume& v) {
  Array out({v.labels(), v.height(), v.width()});
  for (int l = 0; l < v.labels(); ++l) {
    std::memcpy(out.mutable_data(l), v[l].values().data(), v[l].size() * sizeof(double));
  }
  return out;
}

CostVolume ArrayToVolume(const Array& a) {
  if (a.ndim() != 3) throw InvalidArgument("expected a (labels, height, width) array");
  const int h = static_cast<int>(a.shape(1));
  const int w = static_cast<int>(a.shape(2));
  std::vector<ImagePlane> slices;
  for (py::ssize_t l = 0; l < a.shape(0); ++l) {
    const double* d = a.data(l);
    slices.emplace_back(w, h, std::vector<double>(d, d + std::size_t(w) * h));
  }
  return CostVolume(std::move(slices));
}

py::array_t<int> LabelsToArray(const LabelMap& m) {
  py::array_t<int> out({m.height(), m.width()});
  std::memcpy(out.mutable_data(), m.labels().data(), m.labels().size() * sizeof(int));
  return out;
}

std::vector<PixelCoord> ToSeeds(const std::vector<std::pair<int, int>>& xy) {
  std::vector<PixelCoord> out;
  for (const auto& [x, y] : xy) out.push_back({x, y});
  return out;
}

}  // namespace
}  // namespace hgf

PYBIND11_MODULE(_hgf, m) {
  using namespace hgf;
  m.doc() = "Hierarchical guided image filtering";

  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<NumericalDegeneracy>(m, "NumericalDegeneracy",
                                              PyExc_ArithmeticError);

  m.attr("DEFAULT_LAMBDA") = FilterParams::kDefaultLambda;
  m.attr("DEFAULT_RADIUS") = FilterParams::kDefaultRadius;
  m.attr("DEFAULT_DEGREE") = PolynomialSpec::kDefaultDegree;

  m.def(
      "hgf_filter",
      [](const Array& input, const py::object& guidance, double lam, int radius,
         int degree) {
        const ImagePlane y = ToPlane(input);
        const ChannelStack g = GuidanceOr(input, guidance);
        const FilterParams p = FilterParams::Make(lam, radius, degree);
        ImagePlane z;
        {
          py::gil_scoped_release release;
          z = HgfFilter(y, g, p);
        }
        return FromPlane(z);
      },
      py::arg("input"), py::arg("guidance") = py::none(),
      py::arg("lam") = FilterParams::kDefaultLambda,
      py::arg("radius") = FilterParams::kDefaultRadius,
      py::arg("degree") = PolynomialSpec::kDefaultDegree,
      "Filters a single-channel image against polynomial guidance.");

  m.def(
      "hgf_filter_timed",
      [](const Array& input, const py::object& guidance, double lam, int radius,
         int degree) {
        const FilterResult r = HgfFilterTimed(ToPlane(input), GuidanceOr(input, guidance),
                                              FilterParams::Make(lam, radius, degree));
        py::dict t;
        t["gram"] = r.times.gram_ms;
        t["alpha"] = r.times.alpha_ms;
        t["weights"] = r.times.weights_ms;
        t["aggregate"] = r.times.aggregate_ms;
        t["total"] = r.times.total_ms;
        return py::make_tuple(FromPlane(r.output), t);
      },
      py::arg("input"), py::arg("guidance") = py::none(),
      py::arg("lam") = FilterParams::kDefaultLambda,
      py::arg("radius") = FilterParams::kDefaultRadius,
      py::arg("degree") = PolynomialSpec::kDefaultDegree,
      "Like hgf_filter, also returning per-stage times in milliseconds.");

  m.def(
      "direct_ridge_filter",
      [](const Array& input, const py::object& guidance, double lam, int radius,
         int degree) {
        return FromPlane(DirectRidgeFilter(ToPlane(input), GuidanceOr(input, guidance),
                                           FilterParams::Make(lam, radius, degree)));
      },
      py::arg("input"), py::arg("guidance") = py::none(),
      py::arg("lam") = FilterParams::kDefaultLambda,
      py::arg("radius") = FilterParams::kDefaultRadius,
      py::arg("degree") = PolynomialSpec::kDefaultDegree,
      "Reference filter solving every window's ridge system directly.");

  m.def(
      "gf_filter",
      [](const Array& input, const py::object& guidance, int radius, double eps) {
        return FromPlane(GfFilter(ToPlane(input), GuidanceOr(input, guidance), radius, eps));
      },
      py::arg("input"), py::arg("guidance") = py::none(),
      py::arg("radius") = FilterParams::kDefaultRadius,
      py::arg("eps") = FilterParams::kDefaultLambda,
      "Classic guided filter with 1- or 3-channel guidance.");

  m.def(
      "box_average",
      [](const Array& plane, int radius) {
        return FromPlane(BoxAverage(ToPlane(plane), WindowSpec(radius)));
      },
      py::arg("plane"), py::arg("radius"));

  m.def(
      "box_sum",
      [](const Array& plane, int radius) {
        return FromPlane(BoxSum(ToPlane(plane), WindowSpec(radius)));
      },
      py::arg("plane"), py::arg("radius"));

  m.def(
      "synthesize_guidance",
      [](const Array& image, int degree) {
        return FromStack(SynthesizePolynomialGuidance(ToStack(image), PolynomialSpec(degree)));
      },
      py::arg("image"), py::arg("degree") = PolynomialSpec::kDefaultDegree,
      "Per-channel powers 1..degree, channel-major, as (height, width, m*degree).");

  m.def(
      "stereo_cost",
      [](const Array& left, const Array& right, int dmax) {
        return VolumeToArray(BuildStereoCost(ToStack(left), ToStack(right), dmax));
      },
      py::arg("left"), py::arg("right"), py::arg("dmax"));

  m.def(
      "segmentation_cost",
      [](const Array& image, const std::vector<std::pair<int, int>>& fg,
         const std::vector<std::pair<int, int>>& bg) {
        return VolumeToArray(BuildSegmentationCost(ToStack(image), ToSeeds(fg), ToSeeds(bg)));
      },
      py::arg("image"), py::arg("fg_seeds"), py::arg("bg_seeds"),
      "Seeds are (x, y) pairs. Slice 0 is background, slice 1 foreground.");

  m.def(
      "filter_volume",
      [](const Array& volume, const Array& guidance, const std::string& method,
         double lam, int radius, int degree) {
        return VolumeToArray(FilterVolume(ArrayToVolume(volume), ToStack(guidance),
                                          FilterParams::Make(lam, radius, degree),
                                          ParseAggregationMethod(method)));
      },
      py::arg("volume"), py::arg("guidance"), py::arg("method") = "hgf",
      py::arg("lam") = FilterParams::kDefaultLambda,
      py::arg("radius") = FilterParams::kDefaultRadius,
      py::arg("degree") = PolynomialSpec::kDefaultDegree);

  m.def(
      "winner_takes_all",
      [](const Array& volume) { return LabelsToArray(WinnerTakesAll(ArrayToVolume(volume))); },
      py::arg("volume"));

  m.def("set_max_threads", &SetMaxThreads, py::arg("count"),
        "Caps worker threads; 0 restores the hardware default.");
}
