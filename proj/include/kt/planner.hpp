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

#ifndef KT_PLANNER_HPP_
#define KT_PLANNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kt/rational.hpp"

namespace kt {

struct PlanInput {
  Rational alpha;
  Rational eps_left;
  Rational eps_right;
  std::uint64_t k_left = 0;
  std::uint64_t n = 0;
};

struct PlanFlag {
  std::string name;
  std::string condition;
  bool satisfied = false;
  std::string detail;
};

// Instantiation of the two-sided construction from (alpha, eps_L, eps_R,
// k_L, n). Real-valued quantities (h and the logs) are long double; every
// hypothesis is reported rather than enforced.
struct PlanOutput {
  PlanInput input;
  long double h = 0;               // (4 n k_L / eps_L)^(1/alpha)
  long double window_real_high = 0;  // h^(1+alpha)
  std::uint64_t window_low = 0;    // ceil(h^(1+alpha) / 2)
  std::uint64_t window_high = 0;   // floor(h^(1+alpha))
  std::uint64_t q = 0;             // first prime in the window
  std::int64_t s = 0;              // s + 2 = ceil(k_L / log_q h)
  BigInt num_left;                 // N = q^n
  BigInt num_right;                // M = q^(s+2)
  std::uint64_t left_degree = 0;   // D_L = q
  std::optional<BigInt> right_degree;  // D_R = q^(n-(s+1)) when n > s+1
  BigInt k_left_size;              // K_L = q^k_L
  // Largest K_R with (K_R / q^min(s+2, n-s)) (q-1)/2 <= eps_R.
  BigInt k_right_lemma;
  // (1/50) (1/D_L) min(M, N/M).
  Rational k_right_main;
  std::vector<PlanFlag> flags;
  std::string log_base = "2";
};

// Throws NoPrimeInWindow (with the interval) or TooLarge when the window
// leaves 63 bits; InvalidParams for inputs outside their domains.
PlanOutput plan_parameters(const PlanInput& input);

// Named presets: "two-sided" (alpha = eps_L = eps_R = 1/100) and
// "non-bipartite" (alpha = 1/100, eps_L = eps_R = 1/1000), with
// k_L = floor(delta * n).
PlanInput plan_preset(std::string_view name, std::uint64_t n, const Rational& delta);

}  // namespace kt

#endif  // KT_PLANNER_HPP_
