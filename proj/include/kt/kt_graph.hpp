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

#ifndef KT_KT_GRAPH_HPP_
#define KT_KT_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kt/field.hpp"
#include "kt/linalg.hpp"
#include "kt/poly.hpp"

namespace kt {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// base^exp, throwing TooLarge if it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

// One KT graph instance: left vertices are polynomials of degree < n over
// F_q, right vertices are (y, f(y), f'(y), ..., f^(s)(y)).
struct KTParams {
  FieldRef field;
  unsigned n = 0;
  unsigned s = 0;

  std::uint64_t q() const { return field->order(); }
  std::uint64_t num_left() const { return checked_pow(q(), n); }
  std::uint64_t num_right() const { return checked_pow(q(), s + 2); }
  std::uint64_t left_degree() const { return q(); }
  std::uint64_t right_degree() const { return checked_pow(q(), n - s - 1); }
  // Shared-neighbor count of two right vertices with different seeds:
  // q^(n-(2s+2)) for n >= 2s+2, at most 1 otherwise.
  std::uint64_t cross_seed_overlap() const {
    return n >= 2 * s + 2 ? checked_pow(q(), n - 2 * s - 2) : 1;
  }
};

// Enforces s+1 < n < char(F_q); throws InvalidParams naming the violated
// constraint.
KTParams make_kt_params(FieldRef field, unsigned n, unsigned s);
// Non-fatal notes, e.g. s > n/2.
std::vector<std::string> kt_warnings(const KTParams& params);

struct RightVertex {
  Elem seed;
  Vec z;  // s+1 derivative values

  friend auto operator<=>(const RightVertex&, const RightVertex&) = default;
};

// Integer encodings used by every export: a left vertex is its base-q
// coefficient index; a right vertex is seed + q * (base-q index of z).
std::uint64_t left_index(const KTParams& params, const Poly& f);
Poly left_from_index(const KTParams& params, std::uint64_t index);
std::uint64_t right_index(const KTParams& params, const RightVertex& w);
RightVertex right_from_index(const KTParams& params, std::uint64_t index);

// (f^(0)(y), ..., f^(s)(y)).
Vec psi(const KTParams& params, const Poly& f, Elem y);
RightVertex gamma_L(const KTParams& params, const Poly& f, Elem y);

// (s+1) x n matrix of psi_y in the monomial basis.
MatrixFq psi_matrix(const KTParams& params, Elem y);

// The right-to-left neighbor function. Holds the row-reduced psi_y for
// every seed, so a fixed graph answers gamma_R queries without repeated
// elimination. Immutable after construction and safe to share.
class KTGraph {
 public:
  explicit KTGraph(KTParams params,
                   std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  const KTParams& params() const { return params_; }
  std::uint64_t enumeration_cap() const { return cap_; }

  // Canonical kernel basis of psi_y (columns of K_y).
  const std::vector<Vec>& kernel_basis(Elem y) const {
    return seeds_[y.value].kernel;
  }

  // K_y(t) + g with g the particular solution of psi_y(g) = w.z whose free
  // coordinates are zero. t has n-(s+1) entries.
  Poly gamma_R(const RightVertex& w, std::span<const Elem> t) const;
  // t given by its base-q index in [0, D_R).
  Poly gamma_R(const RightVertex& w, std::uint64_t t_index) const;

  // Sorted left indices of {gamma_R(w, t)}; TooLarge above the cap.
  std::vector<std::uint64_t> right_neighborhood(const RightVertex& w) const;

  // Exact |N(w1) intersect N(w2)| from the stacked psi system. Throws
  // SameVertex when w1 == w2.
  std::uint64_t common_neighbors(const RightVertex& w1,
                                 const RightVertex& w2) const;

 private:
  struct SeedSolver {
    RowEchelon echelon;
    std::vector<Vec> kernel;
  };

  KTParams params_;
  std::uint64_t cap_;
  std::vector<SeedSolver> seeds_;
};

// All right neighborhoods, indexed by right_index. Parallel over right
// vertices; output independent of the worker count.
std::vector<std::vector<std::uint64_t>> all_right_neighborhoods(
    const KTGraph& graph, unsigned workers = 1);

// In-degree of every right vertex, counted from the left by iterating all
// (f, y). Independent of gamma_R.
std::vector<std::uint64_t> right_degrees_from_left(const KTParams& params,
                                                   unsigned workers = 1);

// degree -> number of right vertices.
std::map<std::uint64_t, std::uint64_t> right_degree_histogram(
    const KTParams& params, unsigned workers = 1);

// Header comment lines shared by all edge-list exports.
void write_graph_header(std::ostream& out, const KTParams& params);
// "left_index<TAB>seed<TAB>right_index", one line per edge.
void write_edge_list(std::ostream& out, const KTParams& params,
                     std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace kt

#endif  // KT_KT_GRAPH_HPP_
