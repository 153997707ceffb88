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

#include "kt/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <set>

#include "kt/error.hpp"
#include "kt/parallel.hpp"
#include "kt/sampling.hpp"

namespace kt {
namespace {

std::uint64_t union_size(const std::vector<std::vector<std::uint64_t>>& nbhd,
                         std::span<const std::uint64_t> members,
                         std::vector<std::uint32_t>& stamp, std::uint32_t& gen) {
  if (++gen == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    gen = 1;
  }
  std::uint64_t count = 0;
  for (std::uint64_t r : members) {
    for (std::uint64_t v : nbhd[r]) {
      if (stamp[v] != gen) {
        stamp[v] = gen;
        ++count;
      }
    }
  }
  return count;
}

std::string left_formula(const KTParams& params, std::uint64_t k_left) {
  return "(" + std::to_string(params.q()) + " - " +
         std::to_string(params.n * (params.s + 2)) + "/2 * (" +
         std::to_string(params.q()) + "*" + std::to_string(k_left) + ")^(1/" +
         std::to_string(params.s + 2) + "))";
}

// a * X^(1/m) >= c, with a = a2/2, decided exactly.
bool root_term_at_least(const Rational& c, std::uint64_t a2, unsigned m,
                        const BigInt& x) {
  if (c <= 0) return true;
  const Rational lhs = rational_pow(Rational(2) * c, m);
  const Rational rhs = Rational(boost::multiprecision::pow(BigInt(a2), m) * x);
  return lhs <= rhs;
}

}  // namespace

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kLeft: return "left";
    case Side::kRight: return "right";
    case Side::kHalf: return "half";
  }
  return "unknown";
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 finalizer over (seed, i).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t right_set_neighborhood_size(const KTGraph& graph,
                                          std::span<const RightVertex> set) {
  std::vector<RightVertex> members(set.begin(), set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::uint64_t> all;
  for (const RightVertex& w : members) {
    auto nb = graph.right_neighborhood(w);
    all.insert(all.end(), nb.begin(), nb.end());
  }
  std::sort(all.begin(), all.end());
  return static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
}

Rational right_expansion_epsilon(const KTParams& params, std::uint64_t set_size) {
  const std::uint64_t q = params.q();
  const Rational delta(BigInt(set_size), big_pow(q, params.s + 1));
  const unsigned excess = 2 * params.s + 2 > params.n ? 2 * params.s + 2 - params.n : 0;
  return delta * Rational(BigInt(q - 1), BigInt(2 * q)) * Rational(big_pow(q, excess));
}

Rational right_expansion_bound(const KTParams& params, std::uint64_t set_size) {
  return (1 - right_expansion_epsilon(params, set_size)) *
         Rational(BigInt(params.right_degree())) * Rational(BigInt(set_size));
}

ExpansionReport verify_right_expansion(const KTGraph& graph,
                                       std::span<const RightVertex> set) {
  const KTParams& p = graph.params();
  ExpansionReport rep;
  rep.side = Side::kRight;
  for (const RightVertex& w : set) rep.witness.push_back(right_index(p, w));
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.witness.erase(std::unique(rep.witness.begin(), rep.witness.end()),
                    rep.witness.end());
  rep.set_size = rep.witness.size();
  for (std::uint64_t r : rep.witness) ++rep.bucket_profile[r % p.q()];
  rep.neighborhood_size = right_set_neighborhood_size(graph, set);
  rep.degree = p.right_degree();
  rep.epsilon = right_expansion_epsilon(p, rep.set_size);
  rep.analytic_bound = right_expansion_bound(p, rep.set_size);
  rep.analytic_bound_approx = to_double(*rep.analytic_bound);
  rep.bound_formula = "(1 - eps) * D_R * |T|";
  rep.vacuous = *rep.analytic_bound <= 0;
  rep.ratio = rep.set_size == 0
                  ? Rational(1)
                  : Rational(BigInt(rep.neighborhood_size),
                             BigInt(rep.degree) * rep.set_size);
  rep.pass = Rational(BigInt(rep.neighborhood_size)) >= *rep.analytic_bound;
  return rep;
}

PredictorBound inclusion_exclusion_bound(
    const KTParams& params, const std::map<std::uint64_t, std::uint64_t>& buckets) {
  const std::uint64_t q = params.q();
  BigInt total = 0;
  BigInt sum_sq = 0;
  for (const auto& [seed, t] : buckets) {
    if (seed >= q) throw Error(ErrorCode::kInvalidParams, "bucket seed outside F_q");
    total += t;
    sum_sq += BigInt(t) * t;
  }
  if (total > BigInt(params.num_right())) {
    throw Error(ErrorCode::kInvalidParams, "bucket sizes exceed q^(s+2)");
  }
  const Rational overlap(BigInt(params.cross_seed_overlap()));
  const Rational edges = Rational(total) * Rational(BigInt(params.right_degree()));
  PredictorBound out;
  out.cross_pair_sum = Rational((total * total - sum_sq) / 2);
  out.pairwise = edges - out.cross_pair_sum * overlap;
  out.cauchy_schwarz = edges - overlap * Rational(BigInt(q - 1), BigInt(2 * q)) *
                                   Rational(total * total);
  return out;
}

bool left_bound_vacuous(const KTParams& params, std::uint64_t k_left) {
  const unsigned m = params.s + 2;
  const BigInt x = BigInt(params.q()) * k_left;
  return !(boost::multiprecision::pow(BigInt(2 * params.q()), m) >
           boost::multiprecision::pow(BigInt(params.n * m), m) * x);
}

double left_bound_approx(const KTParams& params, std::uint64_t k_left) {
  const double m = params.s + 2.0;
  return static_cast<double>(params.q()) -
         params.n * m / 2.0 *
             std::pow(static_cast<double>(params.q()) * static_cast<double>(k_left),
                      1.0 / m);
}

bool meets_left_bound(const KTParams& params, std::uint64_t k_left,
                      const Rational& neighbors, const Rational& multiplier) {
  // neighbors >= (q - a r) M  <=>  a r >= q - neighbors / M.
  const Rational c = Rational(BigInt(params.q())) - neighbors / multiplier;
  return root_term_at_least(c, params.n * (params.s + 2), params.s + 2,
                            BigInt(params.q()) * k_left);
}

ExpansionReport verify_left_expansion(const KTParams& params,
                                      std::span<const Poly> set,
                                      std::uint64_t k_left) {
  ExpansionReport rep;
  rep.side = Side::kLeft;
  for (const Poly& f : set) rep.witness.push_back(left_index(params, f));
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.witness.erase(std::unique(rep.witness.begin(), rep.witness.end()),
                    rep.witness.end());
  rep.set_size = rep.witness.size();
  if (rep.set_size > k_left) {
    throw Error(ErrorCode::kInvalidParams, "|S| exceeds K_L");
  }
  const std::uint64_t q = params.q();
  std::vector<std::uint64_t> right;
  for (std::uint64_t li : rep.witness) {
    const Poly f = Poly::from_index(params.field, li);
    for (std::uint64_t y = 0; y < q; ++y) {
      right.push_back(
          right_index(params, gamma_L(params, f, Elem{static_cast<std::uint32_t>(y)})));
    }
  }
  std::sort(right.begin(), right.end());
  rep.neighborhood_size =
      static_cast<std::uint64_t>(std::unique(right.begin(), right.end()) - right.begin());
  rep.degree = q;
  rep.bound_formula = left_formula(params, k_left) + " * |S|";
  rep.analytic_bound_approx =
      left_bound_approx(params, k_left) * static_cast<double>(rep.set_size);
  rep.vacuous = left_bound_vacuous(params, k_left);
  rep.ratio = rep.set_size == 0 ? Rational(1)
                                : Rational(BigInt(rep.neighborhood_size),
                                           BigInt(q) * rep.set_size);
  if (rep.set_size == 0) {
    rep.pass = true;
  } else if (rep.vacuous) {
    rep.pass = rep.neighborhood_size >= 1;
  } else {
    rep.pass = meets_left_bound(params, k_left, Rational(BigInt(rep.neighborhood_size)),
                                Rational(BigInt(rep.set_size)));
  }
  return rep;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

struct ChunkAudit {
  std::vector<std::uint64_t> subsets;
  std::vector<std::uint64_t> best;
  std::vector<std::vector<std::uint64_t>> argmin;
};

class SubsetWalker {
 public:
  SubsetWalker(const std::vector<std::vector<std::uint64_t>>& nbhd,
               std::uint64_t num_left, std::uint64_t k_max)
      : nbhd_(nbhd), cover_(num_left, 0), k_max_(k_max) {
    out_.subsets.assign(k_max + 1, 0);
    out_.best.assign(k_max + 1, UINT64_MAX);
    out_.argmin.assign(k_max + 1, {});
  }

  void run_from(std::uint64_t first) {
    push(first);
    walk(first + 1);
    pop();
  }

  ChunkAudit take() { return std::move(out_); }

 private:
  void push(std::uint64_t r) {
    for (std::uint64_t v : nbhd_[r]) {
      if (cover_[v]++ == 0) ++covered_;
    }
    stack_.push_back(r);
    const std::size_t k = stack_.size();
    ++out_.subsets[k];
    if (covered_ < out_.best[k]) {
      out_.best[k] = covered_;
      out_.argmin[k] = stack_;
    }
  }

  void pop() {
    for (std::uint64_t v : nbhd_[stack_.back()]) {
      if (--cover_[v] == 0) --covered_;
    }
    stack_.pop_back();
  }

  void walk(std::uint64_t next) {
    if (stack_.size() >= k_max_) return;
    for (std::uint64_t r = next; r < nbhd_.size(); ++r) {
      push(r);
      walk(r + 1);
      pop();
    }
  }

  const std::vector<std::vector<std::uint64_t>>& nbhd_;
  std::vector<std::uint32_t> cover_;
  std::uint64_t covered_ = 0;
  std::uint64_t k_max_;
  std::vector<std::uint64_t> stack_;
  ChunkAudit out_;
};

}  // namespace

RightAuditSummary exhaustive_right_audit(const KTGraph& graph, std::uint64_t k_max,
                                         std::uint64_t budget, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t right = p.num_right();
  if (k_max == 0) throw Error(ErrorCode::kInvalidParams, "k_max must be >= 1");
  k_max = std::min(k_max, right);
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const std::uint64_t c = binomial_saturating(right, k);
    total = (c > UINT64_MAX - total) ? UINT64_MAX : total + c;
  }
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(total) + " subsets exceed the audit budget " +
                    std::to_string(budget));
  }
  const auto nbhd = all_right_neighborhoods(graph, workers);
  const std::uint64_t left = p.num_left();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, right / 256);
  auto parts = parallel_chunks<ChunkAudit>(
      right, chunk, workers, [&](std::uint64_t b, std::uint64_t e) {
        SubsetWalker walker(nbhd, left, k_max);
        for (std::uint64_t r = b; r < e; ++r) walker.run_from(r);
        return walker.take();
      });

  RightAuditSummary out;
  out.k_max = k_max;
  out.pass = true;
  bool have_ratio = false;
  const BigInt degree(p.right_degree());
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    SizeAudit sa;
    sa.set_size = k;
    sa.min_neighborhood = UINT64_MAX;
    for (const ChunkAudit& c : parts) {
      sa.subsets += c.subsets[k];
      if (c.best[k] < sa.min_neighborhood) {
        sa.min_neighborhood = c.best[k];
        sa.argmin = c.argmin[k];
      }
    }
    sa.epsilon = right_expansion_epsilon(p, k);
    sa.bound = right_expansion_bound(p, k);
    sa.min_ratio = Rational(BigInt(sa.min_neighborhood), degree * k);
    sa.pass = Rational(BigInt(sa.min_neighborhood)) >= sa.bound;
    out.pass = out.pass && sa.pass;
    if (!have_ratio || sa.min_ratio < out.min_ratio) {
      out.min_ratio = sa.min_ratio;
      out.argmin = sa.argmin;
      have_ratio = true;
    }
    out.sizes.push_back(std::move(sa));
  }
  return out;
}

LeftSampleSummary sample_left_audit(const KTParams& params, std::uint64_t samples,
                                    std::uint64_t set_size, std::uint64_t k_left,
                                    std::uint64_t seed, unsigned workers) {
  const std::uint64_t left = params.num_left();
  if (set_size == 0 || set_size > left) {
    throw Error(ErrorCode::kInvalidParams, "set size must be in [1, q^n]");
  }
  if (set_size > k_left) throw Error(ErrorCode::kInvalidParams, "|S| exceeds K_L");
  const std::uint64_t q = params.q();
  unsigned dim = 0;
  while (checked_pow(q, dim) < set_size) ++dim;

  struct One {
    std::uint64_t neighbors = 0;
    bool pass = false;
    std::vector<std::uint64_t> set;
  };
  auto make_set = [&](std::uint64_t i) {
    std::mt19937_64 rng(sample_seed(seed, i));
    if (i % 2 == 0) return distinct_sample(rng, left, set_size);
    // Affine subspace base + span(v_1..v_dim), walked in coefficient order.
    const Field& f = *params.field;
    auto random_vec = [&] {
      Vec v(params.n);
      for (auto& e : v) e = Elem{static_cast<std::uint32_t>(uniform_below(rng, q))};
      return v;
    };
    const Vec base = random_vec();
    std::vector<Vec> dirs;
    for (unsigned d = 0; d < dim; ++d) dirs.push_back(random_vec());
    std::set<std::uint64_t> chosen;
    const std::uint64_t combos = checked_pow(q, dim);
    for (std::uint64_t c = 0; c < combos && chosen.size() < set_size; ++c) {
      Vec v = base;
      std::uint64_t cc = c;
      for (const Vec& dir : dirs) {
        const Elem coef{static_cast<std::uint32_t>(cc % q)};
        cc /= q;
        for (unsigned k = 0; k < params.n; ++k) v[k] = f.add(v[k], f.mul(coef, dir[k]));
      }
      chosen.insert(Poly(params.field, v).index());
    }
    while (chosen.size() < set_size) chosen.insert(uniform_below(rng, left));
    return std::vector<std::uint64_t>(chosen.begin(), chosen.end());
  };

  auto results = parallel_chunks<One>(samples, 1, workers,
                                      [&](std::uint64_t b, std::uint64_t) {
    One one;
    one.set = make_set(b);
    std::vector<Poly> polys;
    for (std::uint64_t li : one.set) polys.push_back(Poly::from_index(params.field, li));
    const ExpansionReport rep = verify_left_expansion(params, polys, k_left);
    one.neighbors = rep.neighborhood_size;
    one.pass = rep.pass;
    return one;
  });

  LeftSampleSummary out;
  out.seed = seed;
  out.samples = samples;
  out.set_size = set_size;
  out.k_left = k_left;
  out.uniform_samples = (samples + 1) / 2;
  out.structured_samples = samples / 2;
  out.vacuous = left_bound_vacuous(params, k_left);
  out.bound_approx = left_bound_approx(params, k_left) * static_cast<double>(set_size);
  out.min_neighborhood = UINT64_MAX;
  for (const One& r : results) {
    if (!r.pass) ++out.failures;
    if (r.neighbors < out.min_neighborhood) {
      out.min_neighborhood = r.neighbors;
      out.argmin = r.set;
    }
  }
  if (samples == 0) out.min_neighborhood = 0;
  out.pass = out.failures == 0;
  return out;
}

PredictorSampleSummary sample_predictor_audit(const KTGraph& graph,
                                              std::uint64_t samples,
                                              std::uint64_t max_set_size,
                                              std::uint64_t seed, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t right = p.num_right();
  if (max_set_size == 0 || max_set_size > right) {
    throw Error(ErrorCode::kInvalidParams, "max set size must be in [1, q^(s+2)]");
  }
  const auto nbhd = all_right_neighborhoods(graph, workers);
  const std::uint64_t degree = p.right_degree();
  const std::uint64_t full_bucket = checked_pow(p.q(), p.s + 1);

  struct One {
    bool sound = false;
    bool cs_ok = false;
    bool theorem_checked = false;
    bool theorem_ok = false;
    Rational slack;
    std::vector<std::uint64_t> set;
  };
  const std::uint64_t chunk = std::max<std::uint64_t>(1, samples / 64);
  using Block = std::vector<One>;
  auto blocks = parallel_chunks<Block>(samples, chunk, workers,
                                       [&](std::uint64_t b, std::uint64_t e) {
    Block out;
    std::vector<std::uint32_t> stamp(p.num_left(), 0);
    std::uint32_t gen = 0;
    for (std::uint64_t i = b; i < e; ++i) {
      std::mt19937_64 rng(sample_seed(seed, i));
      const std::uint64_t k = 1 + uniform_below(rng, max_set_size);
      One one;
      one.set = distinct_sample(rng, right, k);
      std::map<std::uint64_t, std::uint64_t> buckets;
      for (std::uint64_t r : one.set) ++buckets[r % p.q()];
      const PredictorBound pb = inclusion_exclusion_bound(p, buckets);
      const Rational exact(BigInt(union_size(nbhd, one.set, stamp, gen)));
      one.sound = pb.pairwise <= exact && exact <= Rational(BigInt(degree) * k);
      const Rational s2 = Rational(BigInt(k) * k);
      one.cs_ok = pb.cross_pair_sum <= Rational(BigInt(p.q() - 1), BigInt(2 * p.q())) * s2;
      one.theorem_checked = k < full_bucket;
      one.theorem_ok = !one.theorem_checked || exact >= right_expansion_bound(p, k);
      one.slack = exact - pb.pairwise;
      out.push_back(std::move(one));
    }
    return out;
  });

  PredictorSampleSummary out;
  out.seed = seed;
  out.samples = samples;
  out.max_set_size = max_set_size;
  bool first = true;
  for (const Block& blk : blocks) {
    for (const One& r : blk) {
      out.sound += r.sound;
      out.cauchy_schwarz_ok += r.cs_ok;
      out.theorem_checked += r.theorem_checked;
      out.theorem_ok += r.theorem_checked && r.theorem_ok;
      if (first || r.slack < out.min_slack) {
        out.min_slack = r.slack;
        out.worst = r.set;
        first = false;
      }
    }
  }
  out.pass = out.sound == samples && out.cauchy_schwarz_ok == samples &&
             out.theorem_ok == out.theorem_checked;
  return out;
}

PairAudit audit_common_neighbors(const KTGraph& graph, std::uint64_t crosscheck,
                                 std::uint64_t seed, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t right = p.num_right();
  const std::uint64_t expected = p.cross_seed_overlap();
  const bool exact_regime = p.n >= 2 * p.s + 2;

  struct Part {
    std::uint64_t pairs = 0, same = 0, same_zero = 0;
    std::map<std::uint64_t, std::uint64_t> cross;
  };
  auto parts = parallel_chunks<Part>(
      right, std::max<std::uint64_t>(1, right / 64), workers,
      [&](std::uint64_t b, std::uint64_t e) {
        Part part;
        for (std::uint64_t i = b; i < e; ++i) {
          const RightVertex wi = right_from_index(p, i);
          for (std::uint64_t j = i + 1; j < right; ++j) {
            const RightVertex wj = right_from_index(p, j);
            const std::uint64_t c = graph.common_neighbors(wi, wj);
            ++part.pairs;
            if (wi.seed == wj.seed) {
              ++part.same;
              part.same_zero += c == 0;
            } else {
              ++part.cross[c];
            }
          }
        }
        return part;
      });

  PairAudit out;
  for (const Part& part : parts) {
    out.pairs += part.pairs;
    out.same_seed_pairs += part.same;
    out.same_seed_zero += part.same_zero;
    for (const auto& [c, n] : part.cross) {
      out.cross_seed_histogram[c] += n;
      out.cross_seed_pairs += n;
      if (c == expected) out.cross_seed_matching += n;
      out.cross_seed_max = std::max(out.cross_seed_max, c);
    }
  }

  out.crosscheck_seed = seed;
  std::mt19937_64 rng(sample_seed(seed, 0));
  for (std::uint64_t k = 0; k < crosscheck && right >= 2; ++k) {
    const std::uint64_t i = uniform_below(rng, right);
    std::uint64_t j = uniform_below(rng, right - 1);
    if (j >= i) ++j;
    const RightVertex wi = right_from_index(p, i);
    const RightVertex wj = right_from_index(p, j);
    const auto a = graph.right_neighborhood(wi);
    const auto b = graph.right_neighborhood(wj);
    std::vector<std::uint64_t> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(both));
    ++out.crosschecked;
    out.crosscheck_agree += both.size() == graph.common_neighbors(wi, wj);
  }

  const bool cross_ok = exact_regime ? out.cross_seed_matching == out.cross_seed_pairs
                                     : out.cross_seed_max <= 1;
  out.pass = cross_ok && out.same_seed_zero == out.same_seed_pairs &&
             out.crosscheck_agree == out.crosschecked;
  return out;
}

}  // namespace kt
