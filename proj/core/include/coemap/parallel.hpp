// Copyright 2026 The coemap Authors.
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

#ifndef COEMAP_PARALLEL_HPP_
#define COEMAP_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace coemap {

// Calls fn(i) for every i in [0, n) on up to `workers` threads. Callers
// write results into slot i, so output never depends on scheduling. If any
// call throws, the exception from the lowest index is rethrown after all
// threads join.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn &&fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::size_t error_index = n;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (i < error_index) {
          error = std::current_exception();
          error_index = i;
        }
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    unsigned count = static_cast<unsigned>(
        std::min<std::size_t>(workers, n));
    threads.reserve(count);
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace coemap

#endif  // COEMAP_PARALLEL_HPP_
