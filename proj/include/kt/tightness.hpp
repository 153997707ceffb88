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

#ifndef KT_TIGHTNESS_HPP_
#define KT_TIGHTNESS_HPP_

#include <cstdint>
#include <vector>

#include "kt/kt_graph.hpp"
#include "kt/linalg.hpp"
#include "kt/poly.hpp"
#include "kt/rational.hpp"

namespace kt {

// Two seeds y1 != y2 of a graph with s+1 < n < 2s+2, the moduli
// g_i = (x - y_i)^(s+1), and the matrices relating h1 g1 and h2 g2.
class TightnessContext {
 public:
  // WrongRegime outside s+1 < n < 2s+2, InvalidParams when y1 == y2.
  TightnessContext(KTParams params, Elem y1, Elem y2);

  const KTParams& params() const { return params_; }
  Elem y1() const { return y1_; }
  Elem y2() const { return y2_; }
  const Poly& g1() const { return g1_; }
  const Poly& g2() const { return g2_; }
  // Dimension n-(s+1) of the domain of rho and sigma.
  unsigned domain_dim() const { return params_.n - params_.s - 1; }
  // Upper triangular, entry (i, j) = coefficient of x^(s+1+i-j) in g_t.
  const MatrixFq& m1() const { return m1_; }
  const MatrixFq& m2() const { return m2_; }

  // rho and sigma accept any h of degree <= s; the matrices are kept at
  // that size internally and truncate consistently to domain_dim().
  Poly rho(const Poly& h) const;
  Poly rho_by_division(const Poly& h) const;
  Poly sigma(const Poly& h) const;

 private:
  KTParams params_;
  Elem y1_;
  Elem y2_;
  Poly g1_;
  Poly g2_;
  MatrixFq m1_;
  MatrixFq m2_;
  MatrixFq m1_full_;
  RowEchelon m2_full_;
};

// Matrix of h -> (coefficients s+1 .. s+dim of h g) on deg h < dim.
MatrixFq shift_matrix(const Poly& g, unsigned s, unsigned dim);

struct PhiImage {
  Poly r1;
  Poly r2;
  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

// (f mod g1, f mod g2).
PhiImage phi(const TightnessContext& ctx, const Poly& f);

struct ImageCheck {
  unsigned d = 0;
  std::uint64_t domain_size = 0;  // polynomials of degree exactly d
  std::uint64_t image_size = 0;
  std::uint64_t lines = 0;        // distinct sigma(h), deg h = d-(s+1)
  std::uint64_t union_size = 0;
  bool equal = false;
};

// Image of phi over the polynomials of degree exactly d against the union
// of the lines {(f, f + sigma(h)) : deg f <= s} over deg h = d-(s+1).
// Requires s+1 <= d < 2s+2; BudgetExceeded when q^(d+1) > budget.
ImageCheck image_structure_check(const TightnessContext& ctx, unsigned d,
                                 std::uint64_t budget = kDefaultEnumerationCap);

struct StructureReport {
  std::uint64_t phi_domain = 0;  // q^(2s+2)
  bool phi_bijective = false;
  bool crt_roundtrip = false;
  bool phi_low_degree_diagonal = false;  // deg f <= s -> (f, f)
  std::uint64_t rho_domain = 0;          // q^(n-s-1)
  bool rho_bijective = false;
  bool rho_defining_property = false;    // deg(h g1 - rho(h) g2) <= s
  bool rho_matches_division = false;
  bool rho_linear = false;
  bool rho_fixes_constants = false;
  bool matrices_unit_triangular = false;
  bool sigma_homomorphism = false;
  bool sigma_injective = false;
  std::uint64_t sigma_image_size = 0;
  std::vector<ImageCheck> images;  // d = s+1 .. 2s+1
  bool pass = false;
};

// Exhaustive checks of phi, rho, sigma and the image decomposition.
StructureReport check_structure(const TightnessContext& ctx,
                                std::uint64_t budget = kDefaultEnumerationCap);

struct TightnessWitness {
  std::vector<RightVertex> t1;  // seed y1
  std::vector<RightVertex> t2;  // seed y2
  std::uint64_t k = 0;
  std::uint64_t right_degree = 0;
  std::uint64_t expected_count = 0;  // K D_R - |T1| |T2|
};

// R = sigma of the first K/2 polynomials of degree < n-(s+1) in index
// order; T_i = {(y_i, psi_{y_i}(r)) : r in R}. K must be even and
// positive; WitnessTooLarge when K/2 > q^(n-s-1).
TightnessWitness build_tightness_witness(const TightnessContext& ctx,
                                         std::uint64_t k);

struct WitnessCheck {
  std::uint64_t achieved_count = 0;
  std::uint64_t expected_count = 0;
  std::uint64_t cross_pairs = 0;
  std::uint64_t cross_pairs_one = 0;  // pairs sharing exactly one neighbor
  Rational delta;                     // K / q^(n-s-1)
  Rational epsilon_achieved;          // 1 - achieved / (K D_R)
  Rational epsilon_claimed;           // delta / 4
  bool pass = false;
};

WitnessCheck check_tightness_witness(const KTGraph& graph,
                                     const TightnessWitness& witness);

}  // namespace kt

#endif  // KT_TIGHTNESS_HPP_
