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

#include "kt/tightness.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kt/error.hpp"
#include "kt/expansion.hpp"

namespace kt {
namespace {

void require_regime(const KTParams& p) {
  if (!(p.s + 1 < p.n && p.n < 2 * p.s + 2)) {
    throw Error(ErrorCode::kWrongRegime,
                "tightness requires s+1 < n < 2s+2 (got n=" + std::to_string(p.n) +
                    ", s=" + std::to_string(p.s) + ")");
  }
}

Poly poly_of(const FieldRef& field, const Vec& v) { return Poly(field, v); }

// All polynomials of degree < len, in index order.
std::uint64_t count_below(std::uint64_t q, unsigned len) { return checked_pow(q, len); }

std::vector<Elem> pair_key(const PhiImage& im, unsigned len) {
  std::vector<Elem> key = im.r1.padded(len);
  const auto second = im.r2.padded(len);
  key.insert(key.end(), second.begin(), second.end());
  return key;
}

}  // namespace

MatrixFq shift_matrix(const Poly& g, unsigned s, unsigned dim) {
  MatrixFq m(g.field(), dim, dim);
  for (unsigned i = 0; i < dim; ++i) {
    for (unsigned j = i; j < dim; ++j) {
      const unsigned k = s + 1 + i - j;
      m.at(i, j) = g.coeff(k);
    }
  }
  return m;
}

TightnessContext::TightnessContext(KTParams params, Elem y1, Elem y2)
    : params_((require_regime(params), std::move(params))),
      y1_(y1),
      y2_(y2),
      g1_(Poly::shifted_power(params_.field, y1, params_.s + 1)),
      g2_(Poly::shifted_power(params_.field, y2, params_.s + 1)),
      m1_(shift_matrix(g1_, params_.s, domain_dim())),
      m2_(shift_matrix(g2_, params_.s, domain_dim())),
      m1_full_(shift_matrix(g1_, params_.s, params_.s + 1)),
      m2_full_(shift_matrix(g2_, params_.s, params_.s + 1)) {
  if (y1 == y2) throw Error(ErrorCode::kInvalidParams, "seeds y1 and y2 must differ");
  if (!params_.field->contains(y1) || !params_.field->contains(y2)) {
    throw Error(ErrorCode::kInvalidParams, "seed outside the field");
  }
}

Poly TightnessContext::rho(const Poly& h) const {
  const unsigned dim = params_.s + 1;
  if (h.degree() >= static_cast<int>(dim)) {
    throw Error(ErrorCode::kInvalidParams, "rho needs deg h <= s");
  }
  const Vec rhs = m1_full_.apply(h.padded(dim));
  auto sol = m2_full_.particular(rhs);
  if (!sol) throw Error(ErrorCode::kInternal, "shift matrix of g2 is singular");
  return poly_of(params_.field, *sol);
}

Poly TightnessContext::rho_by_division(const Poly& h) const {
  return poly_divmod(h * g1_, g2_).quotient;
}

Poly TightnessContext::sigma(const Poly& h) const {
  Poly out = h * g1_ - rho(h) * g2_;
  if (out.degree() > static_cast<int>(params_.s)) {
    throw Error(ErrorCode::kInternal, "sigma(h) has degree above s");
  }
  return out;
}

PhiImage phi(const TightnessContext& ctx, const Poly& f) {
  return {poly_mod(f, ctx.g1()), poly_mod(f, ctx.g2())};
}

ImageCheck image_structure_check(const TightnessContext& ctx, unsigned d,
                                 std::uint64_t budget) {
  const KTParams& p = ctx.params();
  const unsigned s = p.s;
  if (d < s + 1 || d >= 2 * s + 2) {
    throw Error(ErrorCode::kInvalidParams, "image check needs s+1 <= d < 2s+2");
  }
  const std::uint64_t q = p.q();
  const std::uint64_t total = count_below(q, d + 1);
  if (total > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumerating degree-" + std::to_string(d) + " polynomials needs " +
                    std::to_string(total) + " > budget " + std::to_string(budget));
  }
  ImageCheck out;
  out.d = d;
  const std::uint64_t lower = count_below(q, d);
  std::set<std::vector<Elem>> image;
  for (std::uint64_t i = lower; i < total; ++i) {
    const Poly f = Poly::from_index(p.field, i);
    image.insert(pair_key(phi(ctx, f), s + 1));
  }
  out.domain_size = total - lower;
  out.image_size = image.size();

  const unsigned hd = d - (s + 1);
  const std::uint64_t h_lo = count_below(q, hd);
  const std::uint64_t h_hi = count_below(q, hd + 1);
  std::set<std::vector<Elem>> shifts;
  for (std::uint64_t i = h_lo; i < h_hi; ++i) {
    shifts.insert(ctx.sigma(Poly::from_index(p.field, i)).padded(s + 1));
  }
  out.lines = shifts.size();
  std::set<std::vector<Elem>> lines;
  const std::uint64_t low_count = count_below(q, s + 1);
  for (const auto& b : shifts) {
    const Poly bp(p.field, b);
    for (std::uint64_t i = 0; i < low_count; ++i) {
      const Poly f = Poly::from_index(p.field, i);
      lines.insert(pair_key({f, f + bp}, s + 1));
    }
  }
  out.union_size = lines.size();
  out.equal = image == lines;
  return out;
}

StructureReport check_structure(const TightnessContext& ctx, std::uint64_t budget) {
  const KTParams& p = ctx.params();
  const FieldRef& F = p.field;
  const std::uint64_t q = p.q();
  const unsigned s = p.s;
  StructureReport r;

  r.phi_domain = count_below(q, 2 * s + 2);
  if (r.phi_domain > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "phi domain q^(2s+2) = " + std::to_string(r.phi_domain) +
                    " exceeds budget " + std::to_string(budget));
  }
  {
    std::set<std::vector<Elem>> seen;
    bool roundtrip = true;
    bool diagonal = true;
    const std::uint64_t low = count_below(q, s + 1);
    for (std::uint64_t i = 0; i < r.phi_domain; ++i) {
      const Poly f = Poly::from_index(F, i);
      const PhiImage im = phi(ctx, f);
      seen.insert(pair_key(im, s + 1));
      if (crt_pair(im.r1, ctx.g1(), im.r2, ctx.g2()) != f) roundtrip = false;
      if (i < low && !(im.r1 == f && im.r2 == f)) diagonal = false;
    }
    r.phi_bijective = seen.size() == r.phi_domain;
    r.crt_roundtrip = roundtrip;
    r.phi_low_degree_diagonal = diagonal;
  }

  const unsigned m = ctx.domain_dim();
  r.rho_domain = count_below(q, m);
  {
    bool unit = true;
    for (const MatrixFq* mat : {&ctx.m1(), &ctx.m2()}) {
      for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
          const Elem e = mat->at(i, j);
          if (i == j && e != F->one()) unit = false;
          if (j < i && e != F->zero()) unit = false;
        }
      }
    }
    r.matrices_unit_triangular = unit;
  }
  std::vector<Poly> rho_of;
  std::vector<Poly> sigma_of;
  rho_of.reserve(r.rho_domain);
  sigma_of.reserve(r.rho_domain);
  bool defining = true;
  bool division = true;
  for (std::uint64_t i = 0; i < r.rho_domain; ++i) {
    const Poly h = Poly::from_index(F, i);
    const Poly h2 = ctx.rho(h);
    if ((h * ctx.g1() - h2 * ctx.g2()).degree() > static_cast<int>(s)) defining = false;
    if (h2 != ctx.rho_by_division(h)) division = false;
    rho_of.push_back(h2);
    sigma_of.push_back(ctx.sigma(h));
  }
  r.rho_defining_property = defining;
  r.rho_matches_division = division;
  {
    std::set<std::uint64_t> img;
    bool in_domain = true;
    for (const Poly& h2 : rho_of) {
      if (h2.degree() >= static_cast<int>(m)) in_domain = false;
      img.insert(h2.index());
    }
    r.rho_bijective = in_domain && img.size() == r.rho_domain;
  }
  {
    bool constants = true;
    for (std::uint64_t c = 0; c < q && c < r.rho_domain; ++c) {
      if (rho_of[c] != Poly::from_index(F, c)) constants = false;
    }
    r.rho_fixes_constants = constants;
  }
  {
    // Additivity over all pairs, homogeneity over all scalars.
    bool linear = true;
    bool hom = true;
    for (std::uint64_t i = 0; i < r.rho_domain && (linear || hom); ++i) {
      const Poly a = Poly::from_index(F, i);
      for (std::uint64_t j = i; j < r.rho_domain; ++j) {
        const Poly sum = a + Poly::from_index(F, j);
        const std::uint64_t k = sum.index();
        if (rho_of[k] != rho_of[i] + rho_of[j]) linear = false;
        if (sigma_of[k] != sigma_of[i] + sigma_of[j]) hom = false;
      }
      for (std::uint64_t c = 0; c < q; ++c) {
        const Elem e = F->from_int(c);
        const std::uint64_t k = a.scaled(e).index();
        if (rho_of[k] != rho_of[i].scaled(e)) linear = false;
        if (sigma_of[k] != sigma_of[i].scaled(e)) hom = false;
      }
    }
    r.rho_linear = linear;
    r.sigma_homomorphism = hom;
  }
  {
    std::set<std::uint64_t> img;
    for (const Poly& b : sigma_of) img.insert(b.index());
    r.sigma_image_size = img.size();
    r.sigma_injective = r.sigma_image_size == r.rho_domain;
  }
  for (unsigned d = s + 1; d < 2 * s + 2; ++d) {
    r.images.push_back(image_structure_check(ctx, d, budget));
  }
  r.pass = r.phi_bijective && r.crt_roundtrip && r.phi_low_degree_diagonal &&
           r.rho_bijective && r.rho_defining_property && r.rho_matches_division &&
           r.rho_linear && r.rho_fixes_constants && r.matrices_unit_triangular &&
           r.sigma_homomorphism && r.sigma_injective &&
           std::all_of(r.images.begin(), r.images.end(),
                       [](const ImageCheck& c) { return c.equal; });
  return r;
}

TightnessWitness build_tightness_witness(const TightnessContext& ctx, std::uint64_t k) {
  const KTParams& p = ctx.params();
  if (k == 0 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParams,
                "K must be even and positive (got " + std::to_string(k) + ")");
  }
  const std::uint64_t half = k / 2;
  const std::uint64_t domain = count_below(p.q(), ctx.domain_dim());
  if (half > domain) {
    throw Error(ErrorCode::kWitnessTooLarge,
                "K/2 = " + std::to_string(half) + " exceeds q^(n-s-1) = " +
                    std::to_string(domain));
  }
  TightnessWitness w;
  w.k = k;
  w.right_degree = p.right_degree();
  w.expected_count = k * w.right_degree - half * half;
  for (std::uint64_t i = 0; i < half; ++i) {
    const Poly r = ctx.sigma(Poly::from_index(p.field, i));
    w.t1.push_back(gamma_L(p, r, ctx.y1()));
    w.t2.push_back(gamma_L(p, r, ctx.y2()));
  }
  return w;
}

WitnessCheck check_tightness_witness(const KTGraph& graph,
                                     const TightnessWitness& witness) {
  const KTParams& p = graph.params();
  WitnessCheck c;
  std::vector<RightVertex> all = witness.t1;
  all.insert(all.end(), witness.t2.begin(), witness.t2.end());
  c.achieved_count = right_set_neighborhood_size(graph, all);
  c.expected_count = witness.expected_count;
  for (const RightVertex& a : witness.t1) {
    for (const RightVertex& b : witness.t2) {
      ++c.cross_pairs;
      if (graph.common_neighbors(a, b) == 1) ++c.cross_pairs_one;
    }
  }
  const BigInt domain = big_pow(p.q(), p.n - p.s - 1);
  const BigInt k(witness.k);
  c.delta = Rational(k, domain);
  c.epsilon_claimed = c.delta / 4;
  c.epsilon_achieved =
      1 - Rational(BigInt(c.achieved_count), k * BigInt(witness.right_degree));
  c.pass = c.achieved_count == c.expected_count && c.cross_pairs_one == c.cross_pairs &&
           c.epsilon_achieved == c.epsilon_claimed;
  return c;
}

}  // namespace kt
