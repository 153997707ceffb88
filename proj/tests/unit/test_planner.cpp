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

#include <gtest/gtest.h>

#include <cmath>

#include "kt/error.hpp"
#include "kt/planner.hpp"
#include "oracle.hpp"

namespace {

using kt::PlanInput;
using kt::rational;

const kt::PlanFlag& flag(const kt::PlanOutput& o, const std::string& name) {
  for (const auto& f : o.flags) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("missing flag " + name);
}

TEST(Planner, HandExample) {
  const auto o = kt::plan_parameters({rational(1), rational(1, 2), rational(1, 2), 2, 4});
  EXPECT_NEAR(static_cast<double>(o.h), 64.0, 1e-9);
  EXPECT_EQ(o.window_low, 2048u);
  EXPECT_EQ(o.window_high, 4096u);
  EXPECT_EQ(o.q, 2053u);
  for (std::uint64_t c = 2048; c < 2053; ++c) EXPECT_FALSE(oracle::is_prime(c));
  // s+2 = ceil(2 / log_2053(64)) = ceil(3.666..) = 4.
  EXPECT_EQ(o.s, 2);
  EXPECT_FALSE(flag(o, "alpha_log_condition").satisfied);  // 4/2 * log2(16) = 8 > 1
  EXPECT_TRUE(flag(o, "k_left_growth").satisfied);
  EXPECT_TRUE(flag(o, "s_plus_1_lt_n").satisfied);
  EXPECT_EQ(o.num_left, kt::big_pow(2053, 4));
  EXPECT_EQ(o.num_right, kt::big_pow(2053, 4));
  ASSERT_TRUE(o.right_degree.has_value());
  EXPECT_EQ(*o.right_degree, kt::BigInt(2053));
  EXPECT_EQ(o.log_base, "2");
}

TEST(Planner, Monotonicity) {
  long double prev = INFINITY;
  for (int e = 1; e < 10; ++e) {
    const auto o = kt::plan_parameters({rational(1), rational(e, 10), rational(1, 2), 1, 2});
    EXPECT_LT(o.h, prev);
    prev = o.h;
  }
}

TEST(Planner, Errors) {
  EXPECT_THROW(kt::plan_parameters({rational(0), rational(1, 2), rational(1, 2), 2, 4}),
               kt::Error);
  EXPECT_THROW(kt::plan_parameters({rational(1, 2), rational(1), rational(1, 2), 2, 4}),
               kt::Error);
  try {
    kt::plan_parameters({rational(1, 100), rational(1, 100), rational(1, 100), 2, 4});
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), kt::ErrorCode::kTooLarge);
  }
}

TEST(Planner, Presets) {
  const auto a = kt::plan_preset("two-sided", 100, rational(1, 10));
  EXPECT_EQ(a.alpha, rational(1, 100));
  EXPECT_EQ(a.k_left, 10u);
  const auto b = kt::plan_preset("non-bipartite", 100, rational(1, 10));
  EXPECT_EQ(b.eps_left, rational(1, 1000));
  EXPECT_THROW(kt::plan_preset("other", 10, rational(1, 2)), kt::Error);
}

}  // namespace
