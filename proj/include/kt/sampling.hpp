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

#ifndef KT_SAMPLING_HPP_
#define KT_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace kt {

// Uniform integer in [0, n). Rejection sampling keeps the stream fixed
// across standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// `count` distinct values in [0, universe), sorted.
inline std::vector<std::uint64_t> distinct_sample(std::mt19937_64& rng,
                                                  std::uint64_t universe,
                                                  std::uint64_t count) {
  std::set<std::uint64_t> chosen;
  while (chosen.size() < count) chosen.insert(uniform_below(rng, universe));
  return {chosen.begin(), chosen.end()};
}

}  // namespace kt

#endif  // KT_SAMPLING_HPP_
