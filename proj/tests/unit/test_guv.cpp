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

#include "kt/error.hpp"
#include "kt/guv.hpp"
#include "kt/kt_graph.hpp"

namespace {

using kt::Elem;
using kt::Field;
using kt::Poly;

TEST(GUV, GammaExamples) {
  const auto F = Field::binary(4, 19);
  const auto z = kt::monic_irreducibles(F, 4).front();
  const auto p = kt::make_guv_params(F, 4, 2, 2, z);
  for (std::uint32_t y = 0; y < 16; ++y) {
    EXPECT_EQ(kt::guv_gamma_L(p, Poly(F), Elem{y}), (kt::Vec{Elem{y}, Elem{0}, Elem{0}}));
    const Elem c{7};
    EXPECT_EQ(kt::guv_gamma_L(p, Poly::constant(F, c), Elem{y}),
              (kt::Vec{Elem{y}, c, F->mul(c, c)}));
  }
  // f = x at y = 0: x(0) = 0 and (x^2 mod z)(0) = 0.
  EXPECT_EQ(kt::guv_gamma_L(p, kt::parse_poly(F, "0,1"), Elem{0}),
            (kt::Vec{Elem{0}, Elem{0}, Elem{0}}));
}

TEST(GUV, Validation) {
  const auto F = Field::binary(4, 19);
  const Poly reducible = kt::parse_poly(F, "1,1,0,0,1");  // splits over GF(16)
  EXPECT_FALSE(kt::is_irreducible(reducible));
  EXPECT_THROW(kt::make_guv_params(F, 4, 2, 2, reducible), kt::Error);
  const auto z = kt::monic_irreducibles(F, 4).front();
  EXPECT_THROW(kt::make_guv_params(F, 4, 4, 2, z), kt::Error);   // m < n
  EXPECT_THROW(kt::make_guv_params(F, 4, 2, 16, z), kt::Error);  // q > h
  EXPECT_FALSE(kt::guv_warnings(kt::make_guv_params(F, 4, 2, 2, z)).empty());
}

TEST(GUV, IrreducibleCount) {
  // (q^4 - q^2) / 4 monic irreducible quartics over GF(q).
  EXPECT_EQ(kt::monic_irreducibles(Field::binary(4, 19), 4).size(), (65536u - 256u) / 4u);
  EXPECT_EQ(kt::monic_irreducibles(Field::prime(5), 2).size(), 10u);
}

// Histogram from guv_gamma_L on every (f, y).
kt::DegreeHistogram slow_histogram(const kt::GUVParams& p) {
  const std::uint64_t q = p.q();
  std::vector<std::uint64_t> deg(kt::checked_pow(q, p.m + 1), 0);
  for (std::uint64_t i = 0; i < kt::checked_pow(q, p.n); ++i) {
    const Poly f = Poly::from_index(p.field, i);
    for (std::uint32_t y = 0; y < q; ++y) ++deg[kt::guv_right_index(p, kt::guv_gamma_L(p, f, Elem{y}))];
  }
  kt::DegreeHistogram h;
  for (auto d : deg) ++h[d];
  return h;
}

TEST(GUV, FastHistogramMatchesDirect) {
  const auto F = Field::prime(5);
  for (const Poly& z : kt::monic_irreducibles(F, 3)) {
    const auto p = kt::make_guv_params(F, 3, 2, 3, z);
    ASSERT_EQ(kt::guv_right_degree_histogram(p, 2), slow_histogram(p));
  }
  const auto B = Field::binary(3);
  const auto zs = kt::monic_irreducibles(B, 3);
  for (std::size_t i = 0; i < zs.size(); i += 17) {
    const auto p = kt::make_guv_params(B, 3, 2, 2, zs[i]);
    ASSERT_EQ(kt::guv_right_degree_histogram(p), slow_histogram(p));
  }
}

TEST(GUV, EdgeMassAndReducibleModulus) {
  const auto F = Field::binary(4, 19);
  const kt::GUVParams p{F, 4, 2, 2, kt::parse_poly(F, "1,1,0,0,1")};
  const auto h = kt::guv_right_degree_histogram(p);
  const kt::DegreeHistogram expect{{0, 960}, {256, 3072}, {4096, 64}};
  EXPECT_EQ(h, expect);
  std::uint64_t mass = 0, count = 0;
  for (auto [d, c] : h) {
    mass += d * c;
    count += c;
  }
  EXPECT_EQ(mass, 1u << 20);
  EXPECT_EQ(count, 4096u);
}

TEST(GUV, KTContrastIsSingleBucket) {
  const auto p = kt::make_kt_params(Field::prime(5), 4, 1);
  const auto h = kt::right_degree_histogram(p);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.begin()->first, 25u);
  EXPECT_EQ(h.begin()->second, 125u);
}

}  // namespace
