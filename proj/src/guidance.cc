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

#include "hgf/guidance.h"

#include <string>
#include <vector>

namespace hgf {

PolynomialSpec::PolynomialSpec(int degree) : degree_(degree) {
  if (degree < 1) {
    throw InvalidArgument("polynomial degree must be >= 1, got " +
                          std::to_string(degree));
  }
}

ChannelStack SynthesizePolynomialGuidance(const ChannelStack& input,
                                          PolynomialSpec spec) {
  if (input.empty()) throw InvalidArgument("guidance stack is empty");
  std::vector<ImagePlane> out;
  out.reserve(spec.OutputChannels(input.channels()));
  for (const ImagePlane& channel : input) {
    ImagePlane power = channel;
    out.push_back(power);
    for (int j = 2; j <= spec.degree(); ++j) {
      power = Mul(power, channel);
      out.push_back(power);
    }
  }
  return ChannelStack(std::move(out));
}

}  // namespace hgf
