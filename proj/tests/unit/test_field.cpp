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
#include "kt/field.hpp"
#include "oracle.hpp"

namespace {

using kt::Elem;
using kt::ErrorCode;
using kt::Field;

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const kt::Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(Primality, MatchesTrialDivisionBelow20000) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(kt::is_prime_u64(n), oracle::is_prime(n)) << n;
  }
}

TEST(Primality, LargeKnownValues) {
  EXPECT_TRUE(kt::is_prime_u64(2053));
  EXPECT_TRUE(kt::is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(kt::is_prime_u64(3215031751ULL));            // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(kt::is_prime_u64(18446744073709551615ULL));
}

class FieldAxioms : public ::testing::TestWithParam<kt::FieldSpec> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto F = Field::make(GetParam());
  const std::uint32_t q = static_cast<std::uint32_t>(F->order());
  for (std::uint32_t a = 0; a < q; ++a) {
    const Elem ea{a};
    EXPECT_EQ(F->add(ea, F->neg(ea)), F->zero());
    if (a != 0) EXPECT_EQ(F->mul(ea, F->inv(ea)), F->one());
    for (std::uint32_t b = 0; b < q; ++b) {
      const Elem eb{b};
      EXPECT_EQ(F->add(ea, eb), F->add(eb, ea));
      EXPECT_EQ(F->mul(ea, eb), F->mul(eb, ea));
      for (std::uint32_t c = 0; c < q; c += 3) {
        const Elem ec{c};
        EXPECT_EQ(F->mul(ea, F->add(eb, ec)), F->add(F->mul(ea, eb), F->mul(ea, ec)));
        EXPECT_EQ(F->mul(F->mul(ea, eb), ec), F->mul(ea, F->mul(eb, ec)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(kt::FieldSpec{5, 1, 0}, kt::FieldSpec{7, 1, 0},
                                           kt::FieldSpec{2, 4, 19}, kt::FieldSpec{2, 4, 25},
                                           kt::FieldSpec{2, 3, 0}),
                         [](const ::testing::TestParamInfo<kt::FieldSpec>& info) {
                           return "p" + std::to_string(info.param.p) + "e" +
                                  std::to_string(info.param.e) + "m" +
                                  std::to_string(info.param.modulus);
                         });

TEST(PrimeField, MatchesIntegerArithmetic) {
  const auto F = Field::prime(13);
  for (std::int64_t a = 0; a < 13; ++a) {
    for (std::int64_t b = 0; b < 13; ++b) {
      const Elem ea = F->from_int(a), eb = F->from_int(b);
      EXPECT_EQ(F->mul(ea, eb).value, oracle::mod(a * b, 13));
      EXPECT_EQ(F->sub(ea, eb).value, oracle::mod(a - b, 13));
    }
  }
  EXPECT_EQ(F->from_signed(-1).value, 12u);
  EXPECT_EQ(F->pow(F->from_int(2), 12), F->one());
}

TEST(BinaryField, DefaultModulusAndMultiplication) {
  EXPECT_EQ(kt::default_binary_modulus(4), 19u);
  const auto F = Field::binary(4);
  EXPECT_EQ(F->spec().modulus, 19u);
  // x * x^3 = x^4 = x + 1 modulo x^4 + x + 1.
  EXPECT_EQ(F->mul(Elem{2}, Elem{8}).value, 3u);
  EXPECT_TRUE(kt::is_irreducible_gf2(19));
  EXPECT_FALSE(kt::is_irreducible_gf2(21));  // x^4+x^2+1 = (x^2+x+1)^2
}

TEST(FieldErrors, Validation) {
  EXPECT_EQ(code_of([] { Field::prime(9); }), ErrorCode::kInvalidField);
  EXPECT_EQ(code_of([] { Field::make({3, 2, 0}); }), ErrorCode::kInvalidField);
  EXPECT_EQ(code_of([] { Field::binary(4, 21); }), ErrorCode::kInvalidField);
  const auto F = Field::prime(5);
  EXPECT_EQ(code_of([&] { F->inv(F->zero()); }), ErrorCode::kZeroDivisor);
  const kt::FieldElement a{F, Elem{1}}, b{Field::prime(7), Elem{1}};
  EXPECT_EQ(code_of([&] { (void)(a + b); }), ErrorCode::kFieldMismatch);
  EXPECT_EQ(code_of([&] { (void)(a / kt::FieldElement{F, Elem{0}}); }),
            ErrorCode::kZeroDivisor);
}

TEST(FieldElement, CheckedArithmetic) {
  const auto F = Field::prime(7);
  const kt::FieldElement a{F, Elem{3}}, b{F, Elem{5}};
  EXPECT_EQ((a + b).elem.value, 1u);
  EXPECT_EQ((a * b).elem.value, 1u);
  EXPECT_EQ((a - b).elem.value, 5u);
  EXPECT_EQ(((a / b) * b), a);
}

}  // namespace
