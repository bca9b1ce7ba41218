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

// Binary PGM (P5), PPM (P6) and PFM (PF / Pf) reading and writing.
//
// 8-bit files must use maxval 255 and are mapped to [0, 1] by 1/255. On
// write, 8-bit values are clamped to [0, 1] and quantized with
// floor(v * 255 + 0.5). PFM is written little-endian (scale -1.0) with rows
// stored bottom-to-top; both byte orders are accepted on read.

#ifndef HGF_IMAGE_IO_H_
#define HGF_IMAGE_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hgf/image.h"

namespace hgf {

enum class ImageFormat { kPgm, kPpm, kPfm };

// Picks a format from a ".pgm" / ".ppm" / ".pfm" suffix (case-insensitive).
// Throws InvalidArgument for anything else.
ImageFormat FormatFromPath(const std::string& path);

// PPM yields 3 planes (R, G, B); PGM and Pf yield 1; PF yields 3.
ChannelStack LoadImage(const std::string& path);
void SaveImage(const ChannelStack& stack, const std::string& path,
               ImageFormat format);

// In-memory variants used by the file functions.
ChannelStack DecodeImage(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> EncodeImage(const ChannelStack& stack,
                                      ImageFormat format);

std::uint8_t QuantizeToByte(double v);

}  // namespace hgf

#endif  // HGF_IMAGE_IO_H_
