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

#include "hgf/bench.h"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "hgf/engine.h"
#include "hgf/error.h"
#include "hgf/fixtures.h"
#include "hgf/gf_baseline.h"
#include "hgf/ridge_oracle.h"

namespace hgf {
namespace {

using Clock = std::chrono::steady_clock;

double Ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

StageTimes RunOnce(const std::string& method, const ImagePlane& input,
                   const ChannelStack& guidance, const BenchConfig& cfg) {
  const WindowSpec window(cfg.radius);
  if (method == "hgf") {
    return HgfFilterSynthesized(input, guidance, cfg.lambda, window).times;
  }
  if (method == "gf") {
    return GfFilterTimed(input, guidance, window, cfg.lambda).times;
  }
  if (method == "naive-gf") {
    return NaiveGfFilterTimed(input, guidance, window, cfg.lambda).times;
  }
  if (method == "direct") {
    StageTimes t;
    const auto start = Clock::now();
    const WeightStack coef =
        DirectRidgeCoefficients(input, guidance, cfg.lambda, window);
    t.alpha_ms = Ms(start);
    const auto agg = Clock::now();
    NaiveAggregate(coef, guidance, window);
    t.aggregate_ms = Ms(agg);
    t.total_ms = Ms(start);
    return t;
  }
  throw InvalidArgument("unknown benchmark method '" + method + "'");
}

}  // namespace

std::vector<BenchRecord> RunBenchmark(const BenchConfig& config) {
  if (config.repeats < 1) throw InvalidArgument("repeats must be >= 1");
  for (const auto& m : config.methods) {
    if (std::find(std::begin(kBenchMethods), std::end(kBenchMethods), m) ==
        std::end(kBenchMethods)) {
      throw InvalidArgument("unknown benchmark method '" + m + "'");
    }
  }
  std::vector<BenchRecord> records;
  for (const auto& [w, h] : config.sizes) {
    for (int n : config.channels) {
      if (n < 1) throw InvalidArgument("channel count must be >= 1");
      std::mt19937_64 rng(config.seed);
      const ImagePlane input = RandomPlane(w, h, rng);
      const ChannelStack guidance = RandomStack(n, w, h, rng);
      for (const auto& method : config.methods) {
        RunOnce(method, input, guidance, config);  // warm-up
        std::vector<StageTimes> runs;
        for (int r = 0; r < config.repeats; ++r) {
          runs.push_back(RunOnce(method, input, guidance, config));
        }
        std::sort(runs.begin(), runs.end(),
                  [](const StageTimes& a, const StageTimes& b) {
                    return a.total_ms < b.total_ms;
                  });
        const StageTimes& t = runs[runs.size() / 2];
        const double ms[] = {t.gram_ms, t.alpha_ms, t.weights_ms,
                             t.aggregate_ms, t.total_ms};
        for (int s = 0; s < 5; ++s) {
          records.push_back(BenchRecord{method, w, h, n, kBenchStages[s], ms[s]});
        }
      }
    }
  }
  return records;
}

void WriteBenchCsv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "method,width,height,n,stage,ms\n";
  for (const auto& r : records) {
    out << r.method << ',' << r.width << ',' << r.height << ',' << r.n << ','
        << r.stage << ',' << r.ms << '\n';
  }
}

std::vector<BenchRecord> ReadBenchCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "method,width,height,n,stage,ms") {
    throw InvalidArgument("benchmark CSV: bad header");
  }
  std::vector<BenchRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    BenchRecord r;
    try {
      if (fields.size() != 6) throw std::invalid_argument("field count");
      r.method = fields[0];
      r.width = std::stoi(fields[1]);
      r.height = std::stoi(fields[2]);
      r.n = std::stoi(fields[3]);
      r.stage = fields[4];
      r.ms = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw InvalidArgument("benchmark CSV: malformed row " +
                            std::to_string(line_no));
    }
    if (std::find(std::begin(kBenchStages), std::end(kBenchStages), r.stage) ==
            std::end(kBenchStages) ||
        r.ms < 0.0) {
      throw InvalidArgument("benchmark CSV: bad stage or time on row " +
                            std::to_string(line_no));
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace hgf
