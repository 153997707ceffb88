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

#include "kt/planner.hpp"

#include <cmath>
#include <sstream>

#include "kt/error.hpp"
#include "kt/field.hpp"

namespace kt {
namespace {

long double to_ld(const Rational& r) { return r.convert_to<long double>(); }

std::string fmt(long double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool in_open_unit(const Rational& r) { return r > 0 && r < 1; }

}  // namespace

PlanOutput plan_parameters(const PlanInput& in) {
  if (!(in.alpha > 0 && in.alpha <= 1)) {
    throw Error(ErrorCode::kInvalidParams, "alpha must lie in (0, 1]");
  }
  if (!in_open_unit(in.eps_left) || !in_open_unit(in.eps_right)) {
    throw Error(ErrorCode::kInvalidParams, "eps_L and eps_R must lie in (0, 1)");
  }
  if (in.k_left == 0 || in.n == 0) {
    throw Error(ErrorCode::kInvalidParams, "k_L and n must be positive");
  }
  PlanOutput out;
  out.input = in;
  const long double alpha = to_ld(in.alpha);
  const long double base = 4.0L * in.n * in.k_left / to_ld(in.eps_left);
  out.h = std::pow(base, 1.0L / alpha);
  out.window_real_high = std::pow(out.h, 1.0L + alpha);
  if (!(out.window_real_high < 9.2e18L)) {
    throw Error(ErrorCode::kTooLarge,
                "prime window upper end h^(1+alpha) = " + fmt(out.window_real_high) +
                    " exceeds 63 bits");
  }
  out.window_low = static_cast<std::uint64_t>(std::ceil(out.window_real_high / 2));
  out.window_high = static_cast<std::uint64_t>(std::floor(out.window_real_high));
  for (std::uint64_t c = out.window_low; c <= out.window_high; ++c) {
    if (is_prime_u64(c)) {
      out.q = c;
      break;
    }
  }
  if (out.q == 0) {
    throw Error(ErrorCode::kNoPrimeInWindow,
                "no prime in [" + std::to_string(out.window_low) + ", " +
                    std::to_string(out.window_high) + "]");
  }
  const std::uint64_t q = out.q;
  const long double log_q_h = std::log(out.h) / std::log(static_cast<long double>(q));
  const auto s_plus_2 =
      static_cast<std::int64_t>(std::ceil(static_cast<long double>(in.k_left) / log_q_h));
  out.s = s_plus_2 - 2;
  const std::int64_t n = static_cast<std::int64_t>(in.n);

  out.num_left = big_pow(q, static_cast<unsigned>(in.n));
  out.num_right = s_plus_2 > 0 ? big_pow(q, static_cast<unsigned>(s_plus_2)) : BigInt(1);
  out.left_degree = q;
  if (n > out.s + 1 && out.s >= 0) {
    out.right_degree = big_pow(q, static_cast<unsigned>(n - out.s - 1));
  }
  out.k_left_size = big_pow(q, static_cast<unsigned>(in.k_left));

  const std::int64_t min_exp = std::min(s_plus_2, n - out.s);
  if (min_exp >= 0) {
    // K_R <= 2 eps_R q^min / (q - 1).
    const Rational limit = Rational(2) * in.eps_right *
                           Rational(big_pow(q, static_cast<unsigned>(min_exp))) /
                           Rational(BigInt(q - 1));
    out.k_right_lemma = floor(limit);
  }
  {
    const Rational m(out.num_right);
    const Rational nm = Rational(out.num_left) / m;
    out.k_right_main = Rational(1, 50) * Rational(BigInt(1), BigInt(q)) * (m < nm ? m : nm);
  }

  const long double log_cond =
      4.0L / in.k_left * std::log2(2.0L * in.n / to_ld(in.eps_left));
  out.flags.push_back({"alpha_log_condition", "4/k_L * log(2n/eps_L) <= alpha",
                       log_cond <= alpha, "lhs = " + fmt(log_cond)});
  const Rational growth = Rational(BigInt(in.k_left)) * (1 + in.alpha);
  out.flags.push_back({"k_left_growth", "k_L(1+alpha) <= n",
                       growth <= Rational(BigInt(in.n)), "lhs = " + to_string(growth)});
  out.flags.push_back({"s_nonnegative", "s >= 0", out.s >= 0,
                       "s = " + std::to_string(out.s)});
  out.flags.push_back({"s_plus_1_lt_n", "s+1 < n", out.s + 1 < n,
                       "s+1 = " + std::to_string(out.s + 1)});
  out.flags.push_back({"n_lt_char", "n < char(F_q) = q", in.n < q, ""});
  out.flags.push_back({"left_bound_regime", "15 <= s+1", out.s + 1 >= 15, ""});
  out.flags.push_back({"right_bound_nontrivial",
                       "(K_R / q^min(s+2, n-s)) (q-1)/2 <= eps_R admits K_R >= 1",
                       min_exp >= 0 && out.k_right_lemma >= 1,
                       "max K_R = " + out.k_right_lemma.str()});
  return out;
}

PlanInput plan_preset(std::string_view name, std::uint64_t n, const Rational& delta) {
  PlanInput in;
  in.n = n;
  if (name == "two-sided") {
    in.alpha = in.eps_left = in.eps_right = Rational(1, 100);
  } else if (name == "non-bipartite") {
    in.alpha = Rational(1, 100);
    in.eps_left = in.eps_right = Rational(1, 1000);
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown preset '" + std::string(name) + "'");
  }
  const BigInt k = floor(delta * Rational(BigInt(n)));
  if (k <= 0) throw Error(ErrorCode::kInvalidParams, "delta * n must be >= 1");
  in.k_left = k.convert_to<std::uint64_t>();
  return in;
}

}  // namespace kt
