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

#include "hgf/image_io.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace hgf {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(const std::vector<std::uint8_t>& bytes)
      : bytes_(bytes) {}

  std::string Token() {
    SkipSpaceAndComments();
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
      tok.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (tok.empty()) throw IoError("truncated image header");
    return tok;
  }

  long Integer() {
    const std::string tok = Token();
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (*end != '\0') throw IoError("bad header integer '" + tok + "'");
    return v;
  }

  double Real() {
    const std::string tok = Token();
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (*end != '\0' || !std::isfinite(v)) {
      throw IoError("bad header number '" + tok + "'");
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from the payload.
  std::size_t PayloadOffset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw IoError("truncated image header");
    }
    return pos_ + 1;
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

void CheckSize(long w, long h) {
  if (w <= 0 || h <= 0 || w > (1L << 20) || h > (1L << 20)) {
    throw IoError("bad image dimensions " + std::to_string(w) + "x" +
                  std::to_string(h));
  }
}

ChannelStack DecodeBytes(const std::vector<std::uint8_t>& bytes,
                         HeaderReader& hdr, int channels) {
  const long w = hdr.Integer();
  const long h = hdr.Integer();
  CheckSize(w, h);
  const long maxval = hdr.Integer();
  if (maxval != 255) {
    throw IoError("unsupported maxval " + std::to_string(maxval) +
                  " (only 255)");
  }
  const std::size_t offset = hdr.PayloadOffset();
  const std::size_t pixels = static_cast<std::size_t>(w) * h;
  if (bytes.size() - std::min(bytes.size(), offset) < pixels * channels) {
    throw IoError("truncated image payload");
  }
  std::vector<std::vector<double>> data(channels,
                                        std::vector<double>(pixels));
  for (std::size_t i = 0; i < pixels; ++i) {
    for (int c = 0; c < channels; ++c) {
      data[c][i] = bytes[offset + i * channels + c] / 255.0;
    }
  }
  std::vector<ImagePlane> planes;
  for (auto& d : data) {
    planes.emplace_back(static_cast<int>(w), static_cast<int>(h), std::move(d));
  }
  return ChannelStack(std::move(planes));
}

ChannelStack DecodeFloats(const std::vector<std::uint8_t>& bytes,
                          HeaderReader& hdr, int channels) {
  const long w = hdr.Integer();
  const long h = hdr.Integer();
  CheckSize(w, h);
  const double scale = hdr.Real();
  if (scale == 0.0) throw IoError("PFM scale must be non-zero");
  const bool little = scale < 0.0;
  const std::size_t offset = hdr.PayloadOffset();
  const std::size_t pixels = static_cast<std::size_t>(w) * h;
  if (bytes.size() - std::min(bytes.size(), offset) <
      pixels * channels * sizeof(float)) {
    throw IoError("truncated image payload");
  }
  std::vector<std::vector<double>> data(channels,
                                        std::vector<double>(pixels));
  const std::uint8_t* p = bytes.data() + offset;
  for (long row = h - 1; row >= 0; --row) {
    for (long x = 0; x < w; ++x) {
      for (int c = 0; c < channels; ++c) {
        std::uint32_t u = 0;
        for (int b = 0; b < 4; ++b) {
          const int shift = little ? 8 * b : 8 * (3 - b);
          u |= static_cast<std::uint32_t>(p[b]) << shift;
        }
        p += 4;
        const float f = std::bit_cast<float>(u);
        if (!std::isfinite(f)) throw IoError("PFM payload contains NaN/Inf");
        data[c][static_cast<std::size_t>(row) * w + x] = f;
      }
    }
  }
  std::vector<ImagePlane> planes;
  for (auto& d : data) {
    planes.emplace_back(static_cast<int>(w), static_cast<int>(h), std::move(d));
  }
  return ChannelStack(std::move(planes));
}

void AppendHeader(std::vector<std::uint8_t>& out, const std::string& s) {
  out.insert(out.end(), s.begin(), s.end());
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::uint8_t QuantizeToByte(double v) {
  const double c = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::floor(c * 255.0 + 0.5));
}

ImageFormat FormatFromPath(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : Lower(path.substr(dot));
  if (ext == ".pgm") return ImageFormat::kPgm;
  if (ext == ".ppm") return ImageFormat::kPpm;
  if (ext == ".pfm") return ImageFormat::kPfm;
  throw InvalidArgument("cannot infer image format from '" + path + "'");
}

ChannelStack DecodeImage(const std::vector<std::uint8_t>& bytes) {
  HeaderReader hdr(bytes);
  const std::string magic = hdr.Token();
  if (magic == "P5") return DecodeBytes(bytes, hdr, 1);
  if (magic == "P6") return DecodeBytes(bytes, hdr, 3);
  if (magic == "Pf") return DecodeFloats(bytes, hdr, 1);
  if (magic == "PF") return DecodeFloats(bytes, hdr, 3);
  throw IoError("unsupported magic number '" + magic + "'");
}

std::vector<std::uint8_t> EncodeImage(const ChannelStack& stack,
                                      ImageFormat format) {
  const int n = stack.channels();
  const bool ok = (format == ImageFormat::kPgm && n == 1) ||
                  (format == ImageFormat::kPpm && n == 3) ||
                  (format == ImageFormat::kPfm && (n == 1 || n == 3));
  if (!ok) {
    throw InvalidArgument("cannot encode " + std::to_string(n) +
                          " channels in the requested format");
  }
  const int w = stack.width();
  const int h = stack.height();
  const std::string dims = std::to_string(w) + " " + std::to_string(h) + "\n";
  std::vector<std::uint8_t> out;

  if (format != ImageFormat::kPfm) {
    AppendHeader(out, (n == 1 ? "P5\n" : "P6\n") + dims + "255\n");
    out.reserve(out.size() + static_cast<std::size_t>(w) * h * n);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        for (int c = 0; c < n; ++c) out.push_back(QuantizeToByte(stack[c](x, y)));
      }
    }
    return out;
  }

  AppendHeader(out, (n == 1 ? "Pf\n" : "PF\n") + dims + "-1.0\n");
  out.reserve(out.size() + static_cast<std::size_t>(w) * h * n * 4);
  for (int y = h - 1; y >= 0; --y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < n; ++c) {
        const double v = stack[c](x, y);
        if (std::abs(v) > std::numeric_limits<float>::max()) {
          throw InvalidArgument("value out of single-precision range");
        }
        const auto u = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        for (int b = 0; b < 4; ++b) out.push_back((u >> (8 * b)) & 0xFF);
      }
    }
  }
  return out;
}

ChannelStack LoadImage(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeImage(bytes);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void SaveImage(const ChannelStack& stack, const std::string& path,
               ImageFormat format) {
  const auto bytes = EncodeImage(stack, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace hgf
