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
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "hgf/error.h"
#include "hgf/fixtures.h"
#include "hgf/image_io.h"

namespace hgf {
namespace {

std::vector<std::uint8_t> Bytes(const std::string& header,
                                std::vector<std::uint8_t> payload) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hgf_io_" + name)).string();
}

TEST_CASE("P5 bytes decode to [0, 1]") {
  const ChannelStack s = DecodeImage(Bytes("P5\n2 2\n255\n", {0, 255, 0, 255}));
  REQUIRE(s.channels() == 1);
  CHECK(s[0] == ImagePlane(2, 2, {0, 1, 0, 1}));
}

TEST_CASE("P6 splits channels") {
  const ChannelStack s =
      DecodeImage(Bytes("P6\n2 1\n255\n", {255, 0, 0, 255, 0, 0}));
  REQUIRE(s.channels() == 3);
  CHECK(s[0] == ImagePlane(2, 1, 1.0));
  CHECK(s[1] == ImagePlane(2, 1, 0.0));
  CHECK(s[2] == ImagePlane(2, 1, 0.0));
}

TEST_CASE("Header comments are skipped") {
  const ChannelStack s = DecodeImage(Bytes("P5\n# comment\n1 1\n255\n", {51}));
  CHECK(s[0](0, 0) == doctest::Approx(0.2));
}

TEST_CASE("Decode errors") {
  CHECK_THROWS_AS(DecodeImage(Bytes("P3\n1 1\n255\n", {0})), IoError);
  CHECK_THROWS_AS(DecodeImage(Bytes("P5\n2 2\n255\n", {0, 1, 2})), IoError);
  CHECK_THROWS_AS(DecodeImage(Bytes("P5\n1 1\n65535\n", {0, 0})), IoError);
  CHECK_THROWS_AS(DecodeImage(Bytes("P5\n1 1\n127\n", {0})), IoError);
  CHECK_THROWS_AS(DecodeImage(Bytes("Pf\n2 1\n-1.0\n", {0, 0, 0, 0})), IoError);
  CHECK_THROWS_AS(DecodeImage({}), IoError);
}

TEST_CASE("8-bit quantization rounds half up and clamps") {
  CHECK(QuantizeToByte(0.5) == 128);
  CHECK(QuantizeToByte(1.7) == 255);
  CHECK(QuantizeToByte(-0.2) == 0);
  const auto bytes = EncodeImage(ChannelStack({ImagePlane(1, 1, 0.5)}), ImageFormat::kPgm);
  CHECK(bytes.back() == 128);
}

TEST_CASE("8-bit round trip error is within half a step plus one step") {
  std::mt19937_64 rng(2);
  const ImagePlane p = RandomPlane(31, 7, rng);
  const ChannelStack back = DecodeImage(EncodeImage(ChannelStack({p}), ImageFormat::kPgm));
  CHECK(MaxAbsDiff(back[0], p) <= 1.0 / 255 + 1.0 / 510);
}

TEST_CASE("PFM round trips float data bit for bit") {
  std::mt19937_64 rng(3);
  for (int channels : {1, 3}) {
    std::vector<ImagePlane> planes;
    for (int c = 0; c < channels; ++c) {
      ImagePlane p = RandomPlane(9, 5, rng, -1e3, 1e3);
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = static_cast<float>(p[k]);
      planes.push_back(p);
    }
    const ChannelStack s(std::move(planes));
    const std::string path = TempPath("rt.pfm");
    SaveImage(s, path, ImageFormat::kPfm);
    CHECK(LoadImage(path) == s);
    std::filesystem::remove(path);
  }
}

TEST_CASE("PFM layout is little-endian, bottom row first") {
  const ImagePlane p(1, 2, {1.0, 2.0});  // top row 1, bottom row 2
  const auto bytes = EncodeImage(ChannelStack({p}), ImageFormat::kPfm);
  const std::string header = "Pf\n1 2\n-1.0\n";
  REQUIRE(bytes.size() == header.size() + 8);
  CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
  float first;
  std::memcpy(&first, bytes.data() + header.size(), 4);
  CHECK(first == 2.0f);
}

TEST_CASE("Big-endian PFM is accepted") {
  std::vector<std::uint8_t> payload = {0x3f, 0x80, 0x00, 0x00};  // 1.0f
  const ChannelStack s = DecodeImage(Bytes("Pf\n1 1\n1.0\n", payload));
  CHECK(s[0](0, 0) == 1.0);
}

TEST_CASE("Save validates plane counts and paths") {
  const ChannelStack two({ImagePlane(1, 1), ImagePlane(1, 1)});
  CHECK_THROWS_AS(EncodeImage(two, ImageFormat::kPgm), InvalidArgument);
  CHECK_THROWS_AS(EncodeImage(two, ImageFormat::kPpm), InvalidArgument);
  CHECK_THROWS_AS(EncodeImage(two, ImageFormat::kPfm), InvalidArgument);
  CHECK_THROWS_AS(SaveImage(ChannelStack({ImagePlane(1, 1)}),
                            "/nonexistent-dir/x.pgm", ImageFormat::kPgm),
                  IoError);
  CHECK_THROWS_AS(LoadImage("/nonexistent-dir/x.pgm"), IoError);
}

TEST_CASE("Format from suffix") {
  CHECK(FormatFromPath("a.PGM") == ImageFormat::kPgm);
  CHECK(FormatFromPath("a.ppm") == ImageFormat::kPpm);
  CHECK(FormatFromPath("dir/a.pfm") == ImageFormat::kPfm);
  CHECK_THROWS_AS(FormatFromPath("a.png"), InvalidArgument);
}

}  // namespace
}  // namespace hgf
