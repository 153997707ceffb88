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

#include "kt/bipartite_half.hpp"

#include <algorithm>
#include <random>

#include "kt/error.hpp"
#include "kt/parallel.hpp"
#include "kt/sampling.hpp"

namespace kt {
namespace {

Elem elem(std::uint64_t v) { return Elem{static_cast<std::uint32_t>(v)}; }

std::vector<std::uint64_t> set_neighbors(const KTGraph& graph,
                                         std::span<const std::uint64_t> members) {
  std::vector<std::uint64_t> all;
  for (std::uint64_t u : members) {
    auto nb = half_neighbors(graph, left_from_index(graph.params(), u));
    all.insert(all.end(), nb.begin(), nb.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

std::vector<std::uint64_t> half_neighbors(const KTGraph& graph, const Poly& f) {
  const KTParams& p = graph.params();
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < p.q(); ++y) {
    auto nb = graph.right_neighborhood(gamma_L(p, f, elem(y)));
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool half_adjacent(const KTParams& params, const Poly& f, const Poly& g) {
  for (std::uint64_t y = 0; y < params.q(); ++y) {
    if (psi(params, f, elem(y)) == psi(params, g, elem(y))) return true;
  }
  return false;
}

HalfNeighborResult gamma_half(const KTGraph& graph, const Poly& f, Elem y,
                              std::span<const Elem> t) {
  const KTParams& p = graph.params();
  if (f.is_zero()) throw Error(ErrorCode::kZeroVertex, "gamma_half needs f != 0");
  Poly g = graph.gamma_R(gamma_L(p, f, y), t);
  if (g.is_zero()) return {};
  for (std::uint32_t v = 0; v < y.value; ++v) {
    if (psi(p, f, Elem{v}) == psi(p, g, Elem{v})) return {};
  }
  return {std::move(g)};
}

HalfNeighborResult gamma_half(const KTGraph& graph, const Poly& f, Elem y,
                              std::uint64_t t_index) {
  const KTParams& p = graph.params();
  const Poly t = Poly::from_index(p.field, t_index);
  return gamma_half(graph, f, y, t.padded(p.n - p.s - 1));
}

std::vector<std::uint64_t> gamma_half_outputs(const KTGraph& graph, const Poly& f) {
  const KTParams& p = graph.params();
  const std::uint64_t dr = p.right_degree();
  if (dr * p.q() > graph.enumeration_cap()) {
    throw Error(ErrorCode::kTooLarge, "q * D_R exceeds the enumeration cap");
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < p.q(); ++y) {
    for (std::uint64_t t = 0; t < dr; ++t) {
      auto r = gamma_half(graph, f, elem(y), t);
      if (!r.is_bottom()) out.push_back(left_index(p, *r.value));
    }
  }
  return out;
}

HalfRegularity verify_half_regular(const KTGraph& graph, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t total = p.num_left();
  if (total > graph.enumeration_cap()) {
    throw Error(ErrorCode::kTooLarge, "left vertex count exceeds the enumeration cap");
  }
  using Hist = std::map<std::uint64_t, std::uint64_t>;
  auto parts = parallel_chunks<Hist>(total, 64, workers, [&](std::uint64_t b,
                                                             std::uint64_t e) {
    Hist h;
    for (std::uint64_t i = b; i < e; ++i) {
      ++h[half_neighbors(graph, left_from_index(p, i)).size()];
    }
    return h;
  });
  HalfRegularity r;
  r.vertices = total;
  for (const Hist& h : parts) {
    for (auto [d, c] : h) r.histogram[d] += c;
  }
  if (!r.histogram.empty()) {
    r.degree = r.histogram.begin()->first;
    r.max_degree = r.histogram.rbegin()->first;
  }
  r.regular = r.histogram.size() == 1;
  return r;
}

Rational half_right_factor(const KTParams& params, std::uint64_t set_size) {
  const std::uint64_t k_right = params.left_degree() * set_size;
  return (1 - right_expansion_epsilon(params, k_right)) *
         Rational(BigInt(params.right_degree()));
}

DegreeBracket half_degree_bracket(const KTParams& params, std::uint64_t degree) {
  DegreeBracket b;
  b.a_right = half_right_factor(params, 1);
  b.lower = b.a_right * Rational(BigInt(params.left_degree()));
  b.upper = params.left_degree() * params.right_degree();
  b.non_vacuous = b.a_right > 0;
  b.degree = degree;
  b.in_bracket = Rational(BigInt(degree)) >= b.lower && degree <= b.upper;
  return b;
}

Poly act(Elem alpha, const Poly& f) {
  if (alpha.value == 0) {
    throw Error(ErrorCode::kNotAGroupElement, "the acting group is F_q^*; alpha = 0");
  }
  return f.scaled(alpha);
}

GroupActionReport verify_group_action(const KTGraph& graph, bool exhaustive,
                                      std::uint64_t samples, std::uint64_t seed,
                                      unsigned workers) {
  const KTParams& p = graph.params();
  const Field& F = *p.field;
  const std::uint64_t q = p.q();
  const std::uint64_t left = p.num_left();
  if (exhaustive && left > graph.enumeration_cap()) {
    throw Error(ErrorCode::kTooLarge, "exhaustive group-action check exceeds the cap");
  }
  GroupActionReport rep;
  rep.exhaustive = exhaustive;
  rep.seed = exhaustive ? 0 : seed;
  const std::uint64_t total = exhaustive ? left - 1 : samples;

  auto parts = parallel_chunks<GroupActionReport>(
      total, 16, workers, [&](std::uint64_t b, std::uint64_t e) {
        GroupActionReport part;
        for (std::uint64_t i = b; i < e; ++i) {
          std::uint64_t fi = i + 1;
          if (!exhaustive) {
            std::mt19937_64 rng(sample_seed(seed, i));
            fi = 1 + uniform_below(rng, left - 1);
          }
          const Poly f = left_from_index(p, fi);
          const auto nf = half_neighbors(graph, f);
          ++part.vertices_checked;
          for (std::uint64_t a = 1; a < q; ++a) {
            const Elem alpha = elem(a);
            const Poly af = act(alpha, f);
            ++part.freeness_checked;
            if (af == f && alpha != F.one()) ++part.freeness_failures;
            std::vector<std::uint64_t> scaled;
            scaled.reserve(nf.size());
            for (std::uint64_t g : nf) {
              scaled.push_back(left_index(p, act(alpha, left_from_index(p, g))));
            }
            std::sort(scaled.begin(), scaled.end());
            part.edges_checked += nf.size();
            if (scaled != half_neighbors(graph, af)) ++part.invariance_failures;
            for (std::uint64_t y = 0; y < q; ++y) {
              Vec lhs = psi(p, af, elem(y));
              Vec rhs = psi(p, f, elem(y));
              for (Elem& v : rhs) v = F.mul(alpha, v);
              if (lhs != rhs) ++part.linearity_failures;
            }
          }
        }
        return part;
      });
  for (const auto& part : parts) {
    rep.vertices_checked += part.vertices_checked;
    rep.edges_checked += part.edges_checked;
    rep.invariance_failures += part.invariance_failures;
    rep.freeness_checked += part.freeness_checked;
    rep.freeness_failures += part.freeness_failures;
    rep.linearity_failures += part.linearity_failures;
  }
  rep.pass = rep.invariance_failures == 0 && rep.freeness_failures == 0 &&
             rep.linearity_failures == 0;
  return rep;
}

ExpansionReport verify_half_expansion(const KTGraph& graph, std::span<const Poly> set,
                                      std::uint64_t k_left) {
  const KTParams& p = graph.params();
  ExpansionReport rep;
  rep.side = Side::kHalf;
  for (const Poly& f : set) rep.witness.push_back(left_index(p, f));
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.witness.erase(std::unique(rep.witness.begin(), rep.witness.end()),
                    rep.witness.end());
  rep.set_size = rep.witness.size();
  if (rep.set_size > k_left) throw Error(ErrorCode::kInvalidParams, "|S| exceeds K_L");
  const auto nb = set_neighbors(graph, rep.witness);
  rep.neighborhood_size = nb.size();
  std::vector<std::uint64_t> outside;
  std::set_difference(nb.begin(), nb.end(), rep.witness.begin(), rep.witness.end(),
                      std::back_inserter(outside));
  rep.neighborhood_without_self = outside.size();
  rep.degree = p.left_degree() * p.right_degree();
  if (rep.set_size == 0) {
    rep.ratio = 1;
    rep.pass = true;
    return rep;
  }
  rep.ratio = Rational(BigInt(rep.neighborhood_size),
                       BigInt(rep.degree) * rep.set_size);

  const Rational a_right = half_right_factor(p, rep.set_size);
  const bool right_ok = a_right > 0;
  const bool left_ok = !left_bound_vacuous(p, k_left);
  rep.epsilon = right_expansion_epsilon(p, p.left_degree() * rep.set_size);
  rep.vacuous = !(left_ok && right_ok);
  const Rational n_count(BigInt(rep.neighborhood_size));
  Rational partial(BigInt(p.right_degree()));
  if (right_ok) partial = std::max(partial, a_right * Rational(BigInt(p.left_degree())));
  bool pass = n_count >= partial;
  rep.bound_formula = "A_L * A_R * |S| with A_L = q - n(s+2)/2 (q K_L)^(1/(s+2)), A_R = " +
                      to_string(a_right);
  if (rep.vacuous) {
    rep.analytic_bound = partial;
    rep.analytic_bound_approx = to_double(partial);
    rep.bound_formula += "; vacuous, judged against max(D_R, A_R D_L)";
  } else {
    pass = pass && meets_left_bound(p, k_left, n_count,
                                    a_right * Rational(BigInt(rep.set_size)));
    rep.analytic_bound_approx = left_bound_approx(p, k_left) * to_double(a_right) *
                                static_cast<double>(rep.set_size);
  }
  rep.pass = pass;
  return rep;
}

HalfSampleSummary sample_half_expansion(const KTGraph& graph, std::uint64_t samples,
                                        std::uint64_t set_size, std::uint64_t k_left,
                                        std::uint64_t seed, unsigned workers) {
  const KTParams& p = graph.params();
  const std::uint64_t left = p.num_left();
  if (set_size == 0 || set_size > left) {
    throw Error(ErrorCode::kInvalidParams, "set size must lie in [1, q^n]");
  }
  auto reports = parallel_chunks<std::vector<ExpansionReport>>(
      samples, 8, workers, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<ExpansionReport> out;
        for (std::uint64_t i = b; i < e; ++i) {
          std::mt19937_64 rng(sample_seed(seed, i));
          std::vector<Poly> s;
          for (std::uint64_t u : distinct_sample(rng, left, set_size)) {
            s.push_back(left_from_index(p, u));
          }
          out.push_back(verify_half_expansion(graph, s, k_left));
        }
        return out;
      });
  HalfSampleSummary sum;
  sum.seed = seed;
  sum.samples = samples;
  sum.set_size = set_size;
  sum.k_left = k_left;
  bool first = true;
  for (const auto& chunk : reports) {
    for (const ExpansionReport& r : chunk) {
      if (!r.pass) ++sum.failures;
      if (r.vacuous) ++sum.vacuous;
      if (first || r.neighborhood_size < sum.min_neighborhood) {
        sum.min_neighborhood = r.neighborhood_size;
        sum.argmin = r.witness;
        first = false;
      }
    }
  }
  sum.pass = sum.failures == 0;
  return sum;
}

void write_half_edge_list(std::ostream& out, const KTGraph& graph) {
  const KTParams& p = graph.params();
  const std::uint64_t total = p.num_left();
  if (total > graph.enumeration_cap()) {
    throw Error(ErrorCode::kTooLarge, "left vertex count exceeds the enumeration cap");
  }
  write_graph_header(out, p);
  for (std::uint64_t u = 0; u < total; ++u) {
    for (std::uint64_t v : half_neighbors(graph, left_from_index(p, u))) {
      if (v >= u) out << u << '\t' << v << '\n';
    }
  }
}

}  // namespace kt
