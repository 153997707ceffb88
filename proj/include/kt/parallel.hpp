// Copyright 2026 The KT Expander Authors.
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

#ifndef KT_PARALLEL_HPP_
#define KT_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace kt {

// Splits [0, total) into chunks of `chunk` indices and evaluates
// body(begin, end) -> Result for each, on up to `workers` threads. Chunk
// boundaries depend only on total and chunk, and results come back in
// chunk order, so any in-order merge is independent of the worker count.
// The exception from the lowest failing chunk is rethrown.
template <class Result, class Body>
std::vector<Result> parallel_chunks(std::uint64_t total, std::uint64_t chunk,
                                    unsigned workers, Body&& body) {
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t count = (total + chunk - 1) / chunk;
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      const std::uint64_t begin = i * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      try {
        results[i] = body(begin, end);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), count));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace kt

#endif  // KT_PARALLEL_HPP_
