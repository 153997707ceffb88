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

#ifndef KT_BIPARTITE_HALF_HPP_
#define KT_BIPARTITE_HALF_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kt/expansion.hpp"
#include "kt/kt_graph.hpp"
#include "kt/rational.hpp"

namespace kt {

// Gamma(f) in the half graph on L: left indices g with psi_y(f) = psi_y(g)
// for some seed y, sorted. Contains f itself.
std::vector<std::uint64_t> half_neighbors(const KTGraph& graph, const Poly& f);

// The defining relation, evaluated directly from psi.
bool half_adjacent(const KTParams& params, const Poly& f, const Poly& g);

// A left vertex, or bottom when the dedup or zero rules fire.
struct HalfNeighborResult {
  std::optional<Poly> value;
  bool is_bottom() const { return !value.has_value(); }
};

// g = gamma_R(gamma_L(f, y), t). Bottom when g = 0 or when some y' < y
// already has psi_{y'}(f) = psi_{y'}(g). Throws ZeroVertex for f = 0.
HalfNeighborResult gamma_half(const KTGraph& graph, const Poly& f, Elem y,
                              std::span<const Elem> t);
HalfNeighborResult gamma_half(const KTGraph& graph, const Poly& f, Elem y,
                              std::uint64_t t_index);

// Left indices of every non-bottom output over all (y, t), in (y, t)
// order, repetitions kept.
std::vector<std::uint64_t> gamma_half_outputs(const KTGraph& graph, const Poly& f);

struct HalfRegularity {
  std::uint64_t vertices = 0;
  std::uint64_t degree = 0;  // common degree, or the minimum if irregular
  std::uint64_t max_degree = 0;
  bool regular = false;
  std::map<std::uint64_t, std::uint64_t> histogram;  // degree -> vertices
};

HalfRegularity verify_half_regular(const KTGraph& graph, unsigned workers = 1);

// A_R for right sets of size up to K_R = D_L * set_size.
Rational half_right_factor(const KTParams& params, std::uint64_t set_size);

struct DegreeBracket {
  Rational a_right;  // A_R at K_R = D_L
  Rational lower;    // D_L A_R
  std::uint64_t upper = 0;  // D_L D_R
  bool non_vacuous = false; // A_R > 0
  std::uint64_t degree = 0;
  bool in_bracket = false;  // meaningful only when non_vacuous
};

DegreeBracket half_degree_bracket(const KTParams& params, std::uint64_t degree);

// alpha * f. Throws NotAGroupElement for alpha = 0.
Poly act(Elem alpha, const Poly& f);

struct GroupActionReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;           // sampled mode only
  std::uint64_t vertices_checked = 0;
  std::uint64_t edges_checked = 0;  // (f, g, alpha) triples
  std::uint64_t invariance_failures = 0;
  std::uint64_t freeness_checked = 0;
  std::uint64_t freeness_failures = 0;
  std::uint64_t linearity_failures = 0;  // psi_y(alpha f) != alpha psi_y(f)
  bool pass = false;
};

// Exhaustive mode walks every nonzero f; sampled mode draws `samples`
// nonzero f from `seed`. For each f and nonzero alpha it checks that
// alpha Gamma(f) = Gamma(alpha f), that alpha f = f forces alpha = 1, and
// that psi_y commutes with scaling.
GroupActionReport verify_group_action(const KTGraph& graph, bool exhaustive,
                                      std::uint64_t samples = 0,
                                      std::uint64_t seed = 0, unsigned workers = 1);

// |Gamma(S)| against A_L A_R |S| with A_R at K_R = D_L |S|. When the
// product is vacuous the report is judged against the parts that still
// hold: |Gamma(S)| >= D_R and, for A_R > 0, |Gamma(S)| >= A_R D_L.
ExpansionReport verify_half_expansion(const KTGraph& graph,
                                      std::span<const Poly> set,
                                      std::uint64_t k_left);

struct HalfSampleSummary {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t set_size = 0;
  std::uint64_t k_left = 0;
  std::uint64_t failures = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t min_neighborhood = 0;
  std::vector<std::uint64_t> argmin;
  bool pass = false;
};

HalfSampleSummary sample_half_expansion(const KTGraph& graph, std::uint64_t samples,
                                        std::uint64_t set_size, std::uint64_t k_left,
                                        std::uint64_t seed, unsigned workers = 1);

// Undirected edges "u<TAB>v" with u <= v, self-loops once.
void write_half_edge_list(std::ostream& out, const KTGraph& graph);

}  // namespace kt

#endif  // KT_BIPARTITE_HALF_HPP_
