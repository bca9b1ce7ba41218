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

// Stage-level timing of the filters on seeded random inputs.

#ifndef HGF_BENCH_H_
#define HGF_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hgf {

struct BenchRecord {
  std::string method;
  int width = 0;
  int height = 0;
  int n = 0;
  std::string stage;
  double ms = 0.0;
};

inline constexpr const char* kBenchStages[] = {"gram", "alpha", "weights",
                                               "aggregate", "total"};
inline constexpr const char* kBenchMethods[] = {"hgf", "gf", "naive-gf",
                                                "direct"};

struct BenchConfig {
  std::vector<std::pair<int, int>> sizes{{512, 512}};
  std::vector<int> channels{3};
  std::vector<std::string> methods{"hgf", "naive-gf"};
  int repeats = 3;
  std::uint64_t seed = 1;
  int radius = 7;
  double lambda = 0.05;
};

// For every (method, size, n) runs one discarded warm-up and `repeats`
// timed runs, then reports the stage times of the run with the median
// total. The n guidance channels are used directly (no synthesis). The
// direct oracle reports its window solves as "alpha" and its naive
// averaging as "aggregate".
std::vector<BenchRecord> RunBenchmark(const BenchConfig& config);

void WriteBenchCsv(const std::vector<BenchRecord>& records, std::ostream& out);

// Parses the CSV written above; throws InvalidArgument on a malformed row.
std::vector<BenchRecord> ReadBenchCsv(std::istream& in);

}  // namespace hgf

#endif  // HGF_BENCH_H_
