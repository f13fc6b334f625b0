// Copyright 2026 The Authors.
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

#ifndef ACTSCHED_PARALLEL_HPP_
#define ACTSCHED_PARALLEL_HPP_

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace actsched {

// Worker count: ACTSCHED_NUM_THREADS if set and positive, else the hardware
// concurrency.
inline int NumThreads() {
  if (const char* env = std::getenv("ACTSCHED_NUM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, count); fn must only write to slot i of its
// outputs.
template <typename Fn>
void ParallelFor(int count, Fn&& fn) {
  const int workers = std::min(NumThreads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace actsched

#endif  // ACTSCHED_PARALLEL_HPP_
