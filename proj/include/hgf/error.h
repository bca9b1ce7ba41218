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

#ifndef HGF_ERROR_H_
#define HGF_ERROR_H_

#include <stdexcept>
#include <string>

namespace hgf {

struct PixelCoord {
  int x = 0;  // column
  int y = 0;  // row

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Bad arguments: dimension mismatches, out-of-range parameters, wrong
// channel counts.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File could not be opened, parsed or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator in the inverse recursion (or a pivot in a dense solve)
// vanished. Carries the offending pixel.
class NumericalDegeneracy : public std::runtime_error {
 public:
  NumericalDegeneracy(const std::string& what, PixelCoord where)
      : std::runtime_error(what + " at pixel (" + std::to_string(where.x) +
                           ", " + std::to_string(where.y) + ")"),
        where_(where) {}

  PixelCoord where() const { return where_; }

 private:
  PixelCoord where_;
};

}  // namespace hgf

#endif  // HGF_ERROR_H_
