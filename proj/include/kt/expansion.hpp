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

#ifndef KT_EXPANSION_HPP_
#define KT_EXPANSION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kt/kt_graph.hpp"
#include "kt/rational.hpp"

namespace kt {

enum class Side { kLeft, kRight, kHalf };
std::string_view side_name(Side side);

struct ExpansionReport {
  Side side = Side::kRight;
  std::uint64_t set_size = 0;
  std::uint64_t neighborhood_size = 0;
  // D_R for right audits, D_L for left, D_L * D_R for the half graph.
  std::uint64_t degree = 0;
  // Set when the bound is rational. Left and half bounds involve a real
  // root; they are decided by exact integer comparison and carry only the
  // approximation and the formula.
  std::optional<Rational> analytic_bound;
  double analytic_bound_approx = 0;
  std::string bound_formula;
  std::optional<Rational> epsilon;
  Rational ratio;  // neighborhood_size / (degree * set_size)
  bool vacuous = false;
  bool pass = false;
  // seed -> t_y; right audits only.
  std::map<std::uint64_t, std::uint64_t> bucket_profile;
  // Half-graph audits: |Gamma(S) \ S|.
  std::optional<std::uint64_t> neighborhood_without_self;
  // Indices of the audited set, sorted.
  std::vector<std::uint64_t> witness;
};

// |union of right_neighborhood(w)| over the distinct members of T.
std::uint64_t right_set_neighborhood_size(const KTGraph& graph,
                                          std::span<const RightVertex> set);

// eps = (delta (q-1) / 2q) * q^max(2s+2-n, 0) with delta = |T| / q^(s+1).
Rational right_expansion_epsilon(const KTParams& params, std::uint64_t set_size);
// (1 - eps) * D_R * |T|.
Rational right_expansion_bound(const KTParams& params, std::uint64_t set_size);

ExpansionReport verify_right_expansion(const KTGraph& graph,
                                       std::span<const RightVertex> set);

struct PredictorBound {
  Rational cross_pair_sum;  // sum_{i<j} t_i t_j
  Rational pairwise;        // sum t_y D_R - cross_pair_sum * C
  Rational cauchy_schwarz;  // sum t_y D_R - C (q-1) S^2 / 2q
};

// One level of inclusion-exclusion over seed buckets, with C the maximal
// cross-seed overlap. Throws InvalidParams when sum t_y > q^(s+2).
PredictorBound inclusion_exclusion_bound(
    const KTParams& params, const std::map<std::uint64_t, std::uint64_t>& buckets);

// Left bound A_L = q - n(s+2)/2 * (q K_L)^(1/(s+2)).
bool left_bound_vacuous(const KTParams& params, std::uint64_t k_left);
double left_bound_approx(const KTParams& params, std::uint64_t k_left);

// Exact test of  neighbors >= A_L * multiplier  for positive A_L.
bool meets_left_bound(const KTParams& params, std::uint64_t k_left,
                      const Rational& neighbors, const Rational& multiplier);

// Throws InvalidParams when |S| > K_L.
ExpansionReport verify_left_expansion(const KTParams& params,
                                      std::span<const Poly> set,
                                      std::uint64_t k_left);

struct SizeAudit {
  std::uint64_t set_size = 0;
  std::uint64_t subsets = 0;
  std::uint64_t min_neighborhood = 0;
  std::vector<std::uint64_t> argmin;  // right indices, lexicographically first
  Rational epsilon;
  Rational bound;
  Rational min_ratio;
  bool pass = false;
};

struct RightAuditSummary {
  std::uint64_t k_max = 0;
  std::vector<SizeAudit> sizes;
  Rational min_ratio;
  std::vector<std::uint64_t> argmin;
  bool pass = false;
};

inline constexpr std::uint64_t kDefaultAuditBudget = 100'000'000;

// All right subsets of size 1..k_max. Throws BudgetExceeded when the total
// number of subsets exceeds `budget`.
RightAuditSummary exhaustive_right_audit(const KTGraph& graph,
                                         std::uint64_t k_max,
                                         std::uint64_t budget = kDefaultAuditBudget,
                                         unsigned workers = 1);

// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

struct LeftSampleSummary {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t set_size = 0;
  std::uint64_t k_left = 0;
  std::uint64_t uniform_samples = 0;
  std::uint64_t structured_samples = 0;
  bool vacuous = false;
  double bound_approx = 0;
  std::uint64_t failures = 0;
  std::uint64_t min_neighborhood = 0;
  std::vector<std::uint64_t> argmin;
  bool pass = false;
};

// Even-numbered samples are uniform random sets; odd-numbered samples are
// taken from a random affine subspace of dimension ceil(log_q set_size).
LeftSampleSummary sample_left_audit(const KTParams& params,
                                    std::uint64_t samples,
                                    std::uint64_t set_size,
                                    std::uint64_t k_left, std::uint64_t seed,
                                    unsigned workers = 1);

struct PredictorSampleSummary {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t max_set_size = 0;
  std::uint64_t sound = 0;            // predictor <= exact <= |T| D_R
  std::uint64_t cauchy_schwarz_ok = 0;
  std::uint64_t theorem_checked = 0;  // samples with delta < 1
  std::uint64_t theorem_ok = 0;
  Rational min_slack;                 // exact - pairwise predictor
  std::vector<std::uint64_t> worst;
  bool pass = false;
};

// Random right subsets with sizes uniform in [1, max_set_size].
PredictorSampleSummary sample_predictor_audit(const KTGraph& graph,
                                              std::uint64_t samples,
                                              std::uint64_t max_set_size,
                                              std::uint64_t seed,
                                              unsigned workers = 1);

struct PairAudit {
  std::uint64_t pairs = 0;
  std::uint64_t cross_seed_pairs = 0;
  std::uint64_t cross_seed_matching = 0;  // count == cross_seed_overlap()
  std::uint64_t cross_seed_max = 0;
  std::uint64_t same_seed_pairs = 0;
  std::uint64_t same_seed_zero = 0;
  // common-neighbor count -> number of cross-seed pairs
  std::map<std::uint64_t, std::uint64_t> cross_seed_histogram;
  std::uint64_t crosscheck_seed = 0;
  std::uint64_t crosschecked = 0;
  std::uint64_t crosscheck_agree = 0;
  // True when n >= 2s+2 (the overlap is exact) or n < 2s+2 (at most 1).
  bool pass = false;
};

// common_neighbors on every unordered pair of distinct right vertices;
// `crosscheck` random pairs are recounted by neighborhood intersection.
PairAudit audit_common_neighbors(const KTGraph& graph, std::uint64_t crosscheck,
                                 std::uint64_t seed, unsigned workers = 1);

// Sub-seed for sample i; a fixed mix of (seed, i) so sampled audits do
// not depend on scheduling.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace kt

#endif  // KT_EXPANSION_HPP_
