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

#ifndef HGF_GUIDANCE_H_
#define HGF_GUIDANCE_H_

#include "hgf/image.h"

namespace hgf {

class PolynomialSpec {
 public:
  static constexpr int kDefaultDegree = 2;

  // Throws InvalidArgument unless degree >= 1.
  explicit PolynomialSpec(int degree = kDefaultDegree);
  int degree() const { return degree_; }
  int OutputChannels(int input_channels) const {
    return input_channels * degree_;
  }

 private:
  int degree_;
};

/// Expands m input channels into m*d polynomial channels, channel-major:
/// output[(i-1)*d + (j-1)] = input[i-1]^j for 1 <= i <= m, 1 <= j <= d.
/// The constant ones channel is not included.
ChannelStack SynthesizePolynomialGuidance(const ChannelStack& input,
                                          PolynomialSpec spec);

}  // namespace hgf

#endif  // HGF_GUIDANCE_H_
