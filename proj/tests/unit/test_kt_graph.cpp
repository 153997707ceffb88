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

#include <set>
#include <sstream>

#include "kt/error.hpp"
#include "kt/kt_graph.hpp"
#include "oracle.hpp"

namespace {

using kt::Elem;
using kt::Field;
using kt::KTGraph;
using kt::KTParams;
using kt::Poly;

KTParams params(std::uint64_t p, unsigned n, unsigned s) {
  return kt::make_kt_params(Field::prime(p), n, s);
}

TEST(KTParams, Validation) {
  EXPECT_THROW(params(7, 2, 1), kt::Error);   // s+1 < n fails
  EXPECT_THROW(params(5, 5, 1), kt::Error);   // n < char fails
  EXPECT_THROW(kt::make_kt_params(Field::binary(4), 3, 1), kt::Error);
  const KTParams p = params(7, 5, 1);
  EXPECT_EQ(p.num_left(), 16807u);
  EXPECT_EQ(p.num_right(), 343u);
  EXPECT_EQ(p.right_degree(), 343u);
  EXPECT_EQ(p.cross_seed_overlap(), 7u);
  EXPECT_EQ(params(7, 5, 2).cross_seed_overlap(), 1u);
  try {
    params(7, 3, 2);
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_NE(std::string(e.what()).find("s+1 < n"), std::string::npos);
  }
}

TEST(KTParams, Warnings) {
  const auto w = kt::kt_warnings(params(7, 5, 3 - 1));
  EXPECT_FALSE(w.empty());
  bool half = false;
  for (const auto& s : kt::kt_warnings(params(11, 5, 3))) half |= s.find("s > n/2") != std::string::npos;
  EXPECT_TRUE(half);
}

TEST(Encodings, Bijective) {
  const KTParams p = params(5, 3, 1);
  for (std::uint64_t i = 0; i < p.num_left(); ++i) {
    EXPECT_EQ(kt::left_index(p, kt::left_from_index(p, i)), i);
  }
  for (std::uint64_t i = 0; i < p.num_right(); ++i) {
    const kt::RightVertex w = kt::right_from_index(p, i);
    EXPECT_EQ(kt::right_index(p, w), i);
    EXPECT_EQ(w.seed.value, i % 5);
  }
  EXPECT_THROW(kt::left_from_index(p, p.num_left()), kt::Error);
}

TEST(Psi, MatchesOracleAndMatrix) {
  const KTParams p = params(7, 4, 2);
  for (std::uint64_t i = 0; i < p.num_left(); i += 5) {
    const Poly f = kt::left_from_index(p, i);
    const auto c = oracle::digits(i, 7, 4);
    for (std::uint32_t y = 0; y < 7; ++y) {
      const kt::Vec v = kt::psi(p, f, Elem{y});
      const auto o = oracle::derivatives(c, 2, y, 7);
      for (unsigned j = 0; j <= 2; ++j) ASSERT_EQ(v[j].value, o[j]);
      EXPECT_EQ(kt::psi_matrix(p, Elem{y}).apply(f.padded(4)), v);
    }
  }
}

TEST(Psi, LinearOverFq) {
  const KTParams p = params(5, 4, 1);
  const kt::Field& F = *p.field;
  for (std::uint64_t a = 0; a < 625; a += 17) {
    for (std::uint64_t b = 0; b < 625; b += 29) {
      const Poly f = kt::left_from_index(p, a), g = kt::left_from_index(p, b);
      for (std::uint32_t c = 0; c < 5; ++c) {
        const Poly h = f.scaled(Elem{c}) + g;
        for (std::uint32_t y = 0; y < 5; ++y) {
          kt::Vec lhs = kt::psi(p, h, Elem{y});
          kt::Vec fv = kt::psi(p, f, Elem{y}), gv = kt::psi(p, g, Elem{y});
          for (std::size_t j = 0; j < lhs.size(); ++j) {
            ASSERT_EQ(lhs[j], F.add(F.mul(Elem{c}, fv[j]), gv[j]));
          }
        }
      }
    }
  }
}

TEST(KTGraph, NeighborhoodsMatchOracle) {
  for (auto [q, n, s] : {std::tuple{5, 3u, 1u}, std::tuple{5, 4u, 1u}, std::tuple{7, 5u, 2u}}) {
    const KTParams p = params(q, n, s);
    const KTGraph g(p);
    const auto nb = oracle::right_neighborhoods(q, n, s);
    for (std::uint64_t r = 0; r < p.num_right(); ++r) {
      ASSERT_EQ(g.right_neighborhood(kt::right_from_index(p, r)), nb[r]);
    }
  }
}

TEST(KTGraph, GammaRoundTrip) {
  const KTParams p = params(5, 4, 1);
  const KTGraph g(p);
  for (std::uint64_t r = 0; r < p.num_right(); ++r) {
    const kt::RightVertex w = kt::right_from_index(p, r);
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < p.right_degree(); ++t) {
      const Poly f = g.gamma_R(w, t);
      EXPECT_EQ(kt::gamma_L(p, f, w.seed), w);
      seen.insert(f.index());
    }
    EXPECT_EQ(seen.size(), p.right_degree());
  }
}

TEST(KTGraph, KernelColumnsAnnihilate) {
  const KTParams p = params(7, 5, 1);
  const KTGraph g(p);
  for (std::uint32_t y = 0; y < 7; ++y) {
    const auto& kb = g.kernel_basis(Elem{y});
    EXPECT_EQ(kb.size(), 3u);
    for (const kt::Vec& v : kb) {
      for (Elem e : kt::psi_matrix(p, Elem{y}).apply(v)) EXPECT_EQ(e.value, 0u);
    }
  }
}

TEST(KTGraph, CommonNeighborsMatchIntersection) {
  const KTParams p = params(5, 4, 1);
  const KTGraph g(p);
  const auto nb = oracle::right_neighborhoods(5, 4, 1);
  for (std::uint64_t a = 0; a < p.num_right(); ++a) {
    for (std::uint64_t b = a + 1; b < p.num_right(); ++b) {
      ASSERT_EQ(g.common_neighbors(kt::right_from_index(p, a), kt::right_from_index(p, b)),
                oracle::intersection_size(nb[a], nb[b]));
    }
  }
  const kt::RightVertex w = kt::right_from_index(p, 3);
  try {
    g.common_neighbors(w, w);
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), kt::ErrorCode::kSameVertex);
  }
}

TEST(KTGraph, RegularByBothRoutes) {
  const KTParams p = params(7, 5, 1);
  for (std::uint64_t d : kt::right_degrees_from_left(p)) ASSERT_EQ(d, 343u);
  const auto hist = kt::right_degree_histogram(p, 3);
  ASSERT_EQ(hist.size(), 1u);
  EXPECT_EQ(hist.begin()->first, 343u);
  EXPECT_EQ(hist.begin()->second, 343u);
  const KTGraph g(p);
  const auto all1 = kt::all_right_neighborhoods(g, 1);
  const auto all4 = kt::all_right_neighborhoods(g, 4);
  EXPECT_EQ(all1, all4);
}

TEST(KTGraph, EnumerationCap) {
  const KTParams p = params(7, 5, 1);
  const KTGraph g(p, 100);
  try {
    g.right_neighborhood(kt::right_from_index(p, 0));
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), kt::ErrorCode::kTooLarge);
  }
}

TEST(EdgeList, FormatAndContent) {
  const KTParams p = params(5, 3, 1);
  std::ostringstream os;
  kt::write_edge_list(os, p);
  std::istringstream is(os.str());
  std::string line;
  std::vector<std::string> header;
  std::uint64_t edges = 0;
  while (std::getline(is, line)) {
    if (line.rfind("#", 0) == 0) {
      header.push_back(line);
      continue;
    }
    std::uint64_t l, y, r;
    char t1, t2;
    std::istringstream ls(line);
    ls >> l >> std::noskipws >> t1 >> y >> t2 >> r;
    ASSERT_EQ(t1, '\t');
    ASSERT_EQ(t2, '\t');
    EXPECT_EQ(r, oracle::right_of(oracle::digits(l, 5, 3), 1, static_cast<std::int64_t>(y), 5));
    ++edges;
  }
  EXPECT_EQ(edges, 125u * 5u);
  ASSERT_EQ(header.size(), 6u);
  EXPECT_EQ(header[0], "# q=5");
  EXPECT_EQ(header[5], "# s=1");
}

}  // namespace
