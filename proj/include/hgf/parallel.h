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

// Minimal fork-join helper. Every loop body writes only to the indices it
// owns, so results never depend on the worker count.

#ifndef HGF_PARALLEL_H_
#define HGF_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace hgf {

// Caps the number of worker threads used by all library loops. 0 restores
// the default (hardware concurrency).
void SetMaxThreads(int threads);
int MaxThreads();

// Runs body(begin, end) over contiguous sub-ranges of [0, count). If any
// invocation throws, the exception from the lowest sub-range is rethrown
// after all workers have joined.
void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t, std::size_t)>& body);

// RAII override of the thread cap, restored on scope exit.
class ScopedThreadLimit {
 public:
  explicit ScopedThreadLimit(int threads) : saved_(MaxThreads()) {
    SetMaxThreads(threads);
  }
  ~ScopedThreadLimit() { SetMaxThreads(saved_); }
  ScopedThreadLimit(const ScopedThreadLimit&) = delete;
  ScopedThreadLimit& operator=(const ScopedThreadLimit&) = delete;

 private:
  int saved_;
};

}  // namespace hgf

#endif  // HGF_PARALLEL_H_
