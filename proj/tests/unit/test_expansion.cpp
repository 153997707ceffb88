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
#include <random>

#include "kt/error.hpp"
#include "kt/expansion.hpp"
#include "oracle.hpp"

namespace {

using kt::Elem;
using kt::Field;
using kt::KTGraph;
using kt::KTParams;
using kt::Rational;
using kt::RightVertex;

KTParams params(std::uint64_t p, unsigned n, unsigned s) {
  return kt::make_kt_params(Field::prime(p), n, s);
}

std::vector<RightVertex> rights(const KTParams& p, std::vector<std::uint64_t> ix) {
  std::vector<RightVertex> out;
  for (auto i : ix) out.push_back(kt::right_from_index(p, i));
  return out;
}

TEST(RightNeighborhood, SmallSets) {
  const KTParams p = params(7, 5, 1);
  const KTGraph g(p);
  EXPECT_EQ(kt::right_set_neighborhood_size(g, {}), 0u);
  EXPECT_EQ(kt::right_set_neighborhood_size(g, rights(p, {10})), 343u);
  // Same seed (index mod q) -> disjoint neighborhoods.
  EXPECT_EQ(kt::right_set_neighborhood_size(g, rights(p, {3, 10})), 686u);
  // Cross seed -> overlap q^(n-2s-2) = 7.
  EXPECT_EQ(kt::right_set_neighborhood_size(g, rights(p, {0, 1})), 679u);
}

TEST(RightBound, ClosedForm) {
  // q=7, n=5, s=2: eps = |T|/343 * 6/14 * 7.
  const KTParams p = params(7, 5, 2);
  EXPECT_EQ(kt::right_expansion_epsilon(p, 14), Rational(6, 49));
  EXPECT_EQ(kt::right_expansion_bound(p, 14), Rational(602));
  const KTParams p1 = params(7, 5, 1);
  EXPECT_EQ(kt::right_expansion_epsilon(p1, 2), Rational(2 * 6, 49 * 14));
}

TEST(RightBound, VerifyReport) {
  const KTParams p = params(7, 5, 2);
  const KTGraph g(p);
  const auto r = kt::verify_right_expansion(g, rights(p, {5}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.ratio, Rational(1));
  EXPECT_EQ(r.neighborhood_size, 49u);
  ASSERT_EQ(r.bucket_profile.size(), 1u);
  EXPECT_EQ(r.bucket_profile.begin()->first, 5u);
}

TEST(Predictor, Examples) {
  const KTParams p = params(7, 5, 1);
  const auto one = kt::inclusion_exclusion_bound(p, {{3, 4}});
  EXPECT_EQ(one.pairwise, Rational(4 * 343));
  const auto two = kt::inclusion_exclusion_bound(p, {{0, 1}, {1, 1}});
  EXPECT_EQ(two.pairwise, Rational(679));
  EXPECT_EQ(two.cross_pair_sum, Rational(1));
  EXPECT_THROW(kt::inclusion_exclusion_bound(p, {{0, 400}}), kt::Error);
}

TEST(Predictor, CauchySchwarzOnRandomProfiles) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {5, 7, 11}) {
    const KTParams p = params(q, 4, 1);
    for (int t = 0; t < 500; ++t) {
      std::map<std::uint64_t, std::uint64_t> b;
      std::uint64_t total = 0;
      for (std::uint64_t y = 0; y < q; ++y) {
        b[y] = rng() % (q * q / 2);
        total += b[y];
      }
      // Oracle: sum over i<j by explicit double loop.
      std::uint64_t cross = 0;
      for (auto i = b.begin(); i != b.end(); ++i) {
        for (auto j = std::next(i); j != b.end(); ++j) cross += i->second * j->second;
      }
      const auto pb = kt::inclusion_exclusion_bound(p, b);
      EXPECT_EQ(pb.cross_pair_sum, Rational(kt::BigInt(cross)));
      EXPECT_LE(pb.cross_pair_sum,
                Rational(kt::BigInt(q - 1), kt::BigInt(2 * q)) * Rational(kt::BigInt(total) * total));
      EXPECT_LE(pb.cauchy_schwarz, pb.pairwise);
    }
  }
}

// Minimum union size over all pairs, from oracle neighborhoods.
std::size_t oracle_min_pair(std::int64_t q, unsigned n, unsigned s) {
  const auto nb = oracle::right_neighborhoods(q, n, s);
  std::size_t best = SIZE_MAX;
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      best = std::min(best, nb[a].size() + nb[b].size() - oracle::intersection_size(nb[a], nb[b]));
    }
  }
  return best;
}

TEST(ExhaustiveAudit, PairMinimaMatchOracle) {
  {
    const KTParams p = params(5, 4, 1);
    const auto r = kt::exhaustive_right_audit(KTGraph(p), 2);
    ASSERT_EQ(r.sizes.size(), 2u);
    EXPECT_EQ(r.sizes[0].min_ratio, Rational(1));
    EXPECT_EQ(r.sizes[1].subsets, 125u * 124u / 2u);
    EXPECT_EQ(r.sizes[1].min_neighborhood, oracle_min_pair(5, 4, 1));
    // 1 - common / (2 D_R) with common = 1, D_R = 25.
    EXPECT_EQ(r.min_ratio, Rational(49, 50));
    EXPECT_TRUE(r.pass);
  }
  {
    const KTParams p = params(7, 5, 2);
    const auto r = kt::exhaustive_right_audit(KTGraph(p), 2);
    EXPECT_EQ(r.sizes[1].min_neighborhood, oracle_min_pair(7, 5, 2));
    EXPECT_EQ(r.min_ratio, Rational(97, 98));
    EXPECT_TRUE(r.pass);
    // The argmin is a cross-seed pair.
    ASSERT_EQ(r.argmin.size(), 2u);
    EXPECT_NE(r.argmin[0] % 7, r.argmin[1] % 7);
  }
}

TEST(ExhaustiveAudit, WorkerIndependentAndBudget) {
  const KTParams p = params(5, 3, 1);
  const KTGraph g(p);
  const auto a = kt::exhaustive_right_audit(g, 3, kt::kDefaultAuditBudget, 1);
  const auto b = kt::exhaustive_right_audit(g, 3, kt::kDefaultAuditBudget, 5);
  EXPECT_EQ(a.min_ratio, b.min_ratio);
  EXPECT_EQ(a.argmin, b.argmin);
  for (std::size_t k = 0; k < a.sizes.size(); ++k) {
    EXPECT_EQ(a.sizes[k].min_neighborhood, b.sizes[k].min_neighborhood);
    EXPECT_EQ(a.sizes[k].argmin, b.sizes[k].argmin);
  }
  try {
    kt::exhaustive_right_audit(g, 3, 1000);
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), kt::ErrorCode::kBudgetExceeded);
  }
  EXPECT_EQ(kt::binomial_saturating(125, 3), 317750u);
  EXPECT_EQ(kt::binomial_saturating(3, 5), 0u);
}

TEST(LeftBound, ExactDecisionAgreesWithFloatAwayFromBoundary) {
  for (auto [q, n, s, k] : {std::tuple{31, 5u, 2u, 8ull}, std::tuple{101, 5u, 2u, 2ull},
                            std::tuple{1009, 4u, 1u, 3ull}, std::tuple{7, 5u, 1u, 1ull}}) {
    const KTParams p = params(q, n, s);
    const double a = kt::left_bound_approx(p, k);
    EXPECT_EQ(kt::left_bound_vacuous(p, k), a <= 0) << q;
    if (a <= 0) continue;
    for (std::uint64_t nb = 0; nb < static_cast<std::uint64_t>(3 * a) + 5; ++nb) {
      const double lhs = static_cast<double>(nb), rhs = 2 * a;
      if (std::abs(lhs - rhs) < 1e-6) continue;
      EXPECT_EQ(kt::meets_left_bound(p, k, Rational(kt::BigInt(nb)), Rational(2)), lhs >= rhs)
          << q << " " << nb;
    }
  }
}

TEST(LeftAudit, SingleAndPairs) {
  const KTParams p = params(7, 5, 2);
  const auto one = kt::verify_left_expansion(p, std::vector{kt::left_from_index(p, 100)}, 1);
  EXPECT_EQ(one.neighborhood_size, 7u);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto a = rng() % p.num_left();
    auto b = rng() % p.num_left();
    if (a == b) b = (b + 1) % p.num_left();
    const auto r = kt::verify_left_expansion(
        p, std::vector{kt::left_from_index(p, a), kt::left_from_index(p, b)}, 2);
    EXPECT_GE(r.neighborhood_size, 12u);
    EXPECT_LE(r.neighborhood_size, 14u);
  }
  EXPECT_THROW(kt::verify_left_expansion(
                   p, std::vector{kt::left_from_index(p, 1), kt::left_from_index(p, 2)}, 1),
               kt::Error);
}

TEST(LeftAudit, SampledQ31) {
  const KTParams p = params(31, 5, 2);
  const auto r = kt::sample_left_audit(p, 200, 8, 8, 99, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.uniform_samples + r.structured_samples, 200u);
  const auto r4 = kt::sample_left_audit(p, 200, 8, 8, 99, 4);
  EXPECT_EQ(r.min_neighborhood, r4.min_neighborhood);
  EXPECT_EQ(r.argmin, r4.argmin);
}

TEST(PredictorAudit, Sound) {
  const KTGraph g(params(7, 5, 1));
  const auto r = kt::sample_predictor_audit(g, 200, 20, 4, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.sound, 200u);
  const auto r3 = kt::sample_predictor_audit(g, 200, 20, 4, 3);
  EXPECT_EQ(r.min_slack, r3.min_slack);
  EXPECT_EQ(r.worst, r3.worst);
}

TEST(PairAudit, SmallInstances) {
  const auto a = kt::audit_common_neighbors(KTGraph(params(5, 4, 1)), 50, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.pairs, 125u * 124u / 2u);
  EXPECT_EQ(a.cross_seed_matching, a.cross_seed_pairs);
  EXPECT_EQ(a.crosscheck_agree, a.crosschecked);
  const auto b = kt::audit_common_neighbors(KTGraph(params(5, 3, 1)), 50, 1);
  EXPECT_TRUE(b.pass);
  EXPECT_LE(b.cross_seed_max, 1u);
}

}  // namespace
