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

#ifndef KT_GUV_HPP_
#define KT_GUV_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kt/field.hpp"
#include "kt/linalg.hpp"
#include "kt/poly.hpp"

namespace kt {

// Left vertices are polynomials of degree < n; the y'th neighbor of f is
// (y, f(y), (f^h mod z)(y), ..., (f^(h^(m-1)) mod z)(y)).
struct GUVParams {
  FieldRef field;
  unsigned n = 0;
  unsigned m = 0;
  std::uint64_t h = 0;
  Poly z;
  std::uint64_t q() const { return field->order(); }
};

// Requires q > h, 1 <= m < n, z monic irreducible of degree n.
GUVParams make_guv_params(FieldRef field, unsigned n, unsigned m, std::uint64_t h,
                          Poly z);
// char(F_q) < n is allowed but noted here.
std::vector<std::string> guv_warnings(const GUVParams& params);

Vec guv_gamma_L(const GUVParams& params, const Poly& f, Elem y);
// y + q * (base-q index of the m evaluations).
std::uint64_t guv_right_index(const GUVParams& params, const Vec& neighbor);

using DegreeHistogram = std::map<std::uint64_t, std::uint64_t>;

// In-degree -> number of right vertices over F_q^(m+1), including degree
// 0. TooLarge when q^(n+1) exceeds the cap.
DegreeHistogram guv_right_degree_histogram(const GUVParams& params,
                                           unsigned workers = 1,
                                           std::uint64_t enumeration_cap = std::uint64_t{1} << 24);

// Monic irreducibles of the given degree in increasing index order.
std::vector<Poly> monic_irreducibles(const FieldRef& field, unsigned degree);

struct GUVScanEntry {
  Poly z;
  DegreeHistogram histogram;
  bool edge_mass_ok = false;  // sum degree * count == q^(n+1)
  bool matches = false;
};

struct GUVScan {
  std::vector<GUVScanEntry> entries;
  std::uint64_t candidates = 0;  // monic irreducibles of degree n
  std::optional<std::size_t> first_match;
};

// Histograms for the monic irreducible z in index order, stopping after
// the first that equals `target` (or after `max_scan` entries).
GUVScan guv_scan(const FieldRef& field, unsigned n, unsigned m, std::uint64_t h,
                 const DegreeHistogram& target, std::uint64_t max_scan = UINT64_MAX,
                 unsigned workers = 1);

}  // namespace kt

#endif  // KT_GUV_HPP_
