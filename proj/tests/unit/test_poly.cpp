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

#include <random>
#include <set>

#include "kt/error.hpp"
#include "kt/poly.hpp"
#include "oracle.hpp"

namespace {

using kt::Elem;
using kt::ErrorCode;
using kt::Field;
using kt::Poly;

oracle::Coeffs coeffs_of(const Poly& f, unsigned len) {
  oracle::Coeffs c(len, 0);
  for (unsigned i = 0; i < len; ++i) c[i] = f.coeff(i).value;
  return c;
}

Poly poly_of(const kt::FieldRef& F, const oracle::Coeffs& c) {
  std::vector<Elem> v;
  for (auto x : c) v.push_back(F->from_int(static_cast<std::uint64_t>(x)));
  return Poly(F, v);
}

TEST(Poly, NormalizationAndIndex) {
  const auto F = Field::prime(5);
  const Poly z(F, {Elem{0}, Elem{0}});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), Poly::kZeroDegree);
  for (std::uint64_t i = 0; i < 625; ++i) EXPECT_EQ(Poly::from_index(F, i).index(), i);
  EXPECT_EQ(Poly::from_index(F, 7).degree(), 1);
}

TEST(Poly, ArithmeticMatchesSchoolbook) {
  const auto F = Field::prime(7);
  for (std::uint64_t a = 0; a < 343; a += 5) {
    for (std::uint64_t b = 0; b < 343; b += 7) {
      const Poly pa = Poly::from_index(F, a), pb = Poly::from_index(F, b);
      const auto prod = oracle::multiply(oracle::digits(a, 7, 3), oracle::digits(b, 7, 3), 7);
      EXPECT_EQ(pa * pb, poly_of(F, prod));
      EXPECT_EQ((pa + pb) - pb, pa);
    }
  }
}

TEST(Poly, ShiftedPowerMatchesRepeatedProduct) {
  const auto F = Field::prime(7);
  for (std::int64_t y = 0; y < 7; ++y) {
    for (unsigned k = 0; k < 5; ++k) {
      EXPECT_EQ(Poly::shifted_power(F, F->from_int(y), k),
                poly_of(F, oracle::shifted_power(y, k, 7)));
    }
  }
}

TEST(Poly, EvalAndDerivativeMatchOracle) {
  const auto F = Field::prime(7);
  for (std::uint64_t i = 0; i < 2401; i += 3) {
    const Poly f = Poly::from_index(F, i);
    const auto c = oracle::digits(i, 7, 4);
    for (unsigned j = 0; j < 4; ++j) {
      const Poly d = kt::poly_derivative(f, j);
      for (std::int64_t y = 0; y < 7; ++y) {
        ASSERT_EQ(kt::poly_eval(d, F->from_int(y)).value,
                  static_cast<std::uint32_t>(oracle::derivative_at(c, j, y, 7)));
      }
    }
  }
}

TEST(Poly, DivModProperty) {
  const auto F = Field::prime(5);
  for (std::uint64_t a = 0; a < 3125; a += 11) {
    for (std::uint64_t b = 1; b < 125; b += 3) {
      const Poly f = Poly::from_index(F, a), g = Poly::from_index(F, b);
      const auto dm = kt::poly_divmod(f, g);
      EXPECT_EQ(dm.quotient * g + dm.remainder, f);
      EXPECT_LT(dm.remainder.degree(), g.degree());
    }
  }
  EXPECT_THROW(kt::poly_divmod(Poly::from_index(F, 3), Poly(F)), kt::Error);
}

TEST(Poly, ExtendedGcdBezout) {
  const auto F = Field::prime(7);
  for (std::uint64_t a = 0; a < 343; a += 4) {
    for (std::uint64_t b = 0; b < 343; b += 9) {
      const Poly pa = Poly::from_index(F, a), pb = Poly::from_index(F, b);
      const auto g = kt::poly_ext_gcd(pa, pb);
      EXPECT_EQ(g.s * pa + g.t * pb, g.gcd);
      if (!g.gcd.is_zero()) {
        EXPECT_TRUE(g.gcd.is_monic());
        EXPECT_TRUE(kt::poly_mod(pa, g.gcd).is_zero());
        EXPECT_TRUE(kt::poly_mod(pb, g.gcd).is_zero());
      }
    }
  }
}

TEST(Poly, ModPowMatchesRepeatedMultiplication) {
  const auto F = Field::prime(5);
  const Poly z = kt::parse_poly(F, "2,0,1,1");  // x^3 + x^2 + 2
  for (std::uint64_t i = 0; i < 125; i += 7) {
    const Poly f = Poly::from_index(F, i);
    Poly acc = Poly::constant(F, F->one());
    for (std::uint64_t k = 0; k < 12; ++k) {
      EXPECT_EQ(kt::poly_modpow(f, k, z), kt::poly_mod(acc, z));
      acc = acc * f;
    }
  }
}

TEST(Crt, MatchesBruteForceOver625Polynomials) {
  // Moduli of degree 2 at q=5: the answer has degree < 4, so the full
  // search space is the 625 polynomials of degree < 4.
  const auto F = Field::prime(5);
  const Poly g1 = Poly::shifted_power(F, Elem{1}, 2);
  const Poly g2 = kt::parse_poly(F, "2,0,1");  // x^2 + 2, irreducible
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> table;
  for (std::uint64_t i = 0; i < 625; ++i) {
    const Poly f = Poly::from_index(F, i);
    table[{kt::poly_mod(f, g1).index(), kt::poly_mod(f, g2).index()}].push_back(i);
  }
  ASSERT_EQ(table.size(), 625u);
  for (const auto& [key, fs] : table) {
    ASSERT_EQ(fs.size(), 1u);
    const Poly r1 = Poly::from_index(F, key.first), r2 = Poly::from_index(F, key.second);
    EXPECT_EQ(kt::crt_pair(r1, g1, r2, g2).index(), fs[0]);
  }
}

TEST(Crt, NonCoprimeModuliRejected) {
  const auto F = Field::prime(5);
  const Poly g = Poly::shifted_power(F, Elem{2}, 2);
  try {
    kt::crt_pair(Poly(F), g, Poly(F), g * Poly::shifted_power(F, Elem{1}, 1));
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonCoprimeModuli);
  }
}

TEST(Hermite, TwoNodesMatchBruteForce) {
  const auto F = Field::prime(7);
  const unsigned s = 1;
  for (std::uint64_t i = 0; i < 2401; ++i) {
    const auto c = oracle::digits(i, 7, 4);
    std::vector<kt::HermitePoint> pts;
    for (std::int64_t y : {2, 5}) {
      kt::HermitePoint hp{F->from_int(y), {}};
      for (auto v : oracle::derivatives(c, s, y, 7)) hp.values.push_back(F->from_int(v));
      pts.push_back(hp);
    }
    ASSERT_EQ(kt::hermite_interpolate(F, pts, s).index(), i);
  }
}

TEST(Hermite, Errors) {
  const auto F = Field::prime(5);
  const std::vector<kt::HermitePoint> dup{{Elem{1}, {Elem{0}}}, {Elem{1}, {Elem{2}}}};
  try {
    kt::hermite_interpolate(F, dup, 0);
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateNode);
  }
  const std::vector<kt::HermitePoint> big{{Elem{0}, {Elem{0}, Elem{0}, Elem{0}}},
                                          {Elem{1}, {Elem{0}, Elem{0}, Elem{0}}}};
  try {
    kt::hermite_interpolate(F, big, 2);  // k(s+1) = 6 >= 5
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCharTooSmall);
  }
  const std::vector<kt::HermitePoint> shape{{Elem{0}, {Elem{0}}}};
  try {
    kt::hermite_interpolate(F, shape, 1);
    FAIL();
  } catch (const kt::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeError);
  }
}

TEST(Irreducible, MatchesFactorSearch) {
  // Monic of degree <= 3 over GF(5): irreducible iff no root.
  const auto F = Field::prime(5);
  for (unsigned d = 1; d <= 3; ++d) {
    std::uint64_t lead = 1;
    for (unsigned i = 0; i < d; ++i) lead *= 5;
    for (std::uint64_t low = 0; low < lead; ++low) {
      const Poly f = Poly::from_index(F, lead + low);
      bool root = false;
      for (std::uint32_t y = 0; y < 5; ++y) root |= kt::poly_eval(f, Elem{y}).value == 0;
      EXPECT_EQ(kt::is_irreducible(f), d == 1 || !root) << kt::to_string(f);
    }
  }
  // Degree 4 over GF(5): count equals (5^4 - 5^2) / 4 = 150.
  int count = 0;
  for (std::uint64_t low = 0; low < 625; ++low) count += kt::is_irreducible(Poly::from_index(F, 625 + low));
  EXPECT_EQ(count, 150);
}

TEST(PolyText, RoundTrip) {
  const auto F = Field::prime(7);
  for (std::uint64_t i = 0; i < 343; ++i) {
    const Poly f = Poly::from_index(F, i);
    EXPECT_EQ(kt::parse_poly(F, kt::to_string(f)), f);
  }
  EXPECT_EQ(kt::to_string(kt::parse_poly(F, "1,2,0")), "1,2");
  EXPECT_THROW(kt::parse_poly(F, "1,x"), kt::Error);
}

}  // namespace
