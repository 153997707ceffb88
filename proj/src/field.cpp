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

#include "kt/field.hpp"

#include <bit>

#include "kt/error.hpp"

namespace kt {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 k, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (k != 0) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

int gf2_degree(u64 a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

u64 gf2_mod(u64 a, u64 m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

u64 gf2_mulmod(u64 a, u64 b, u64 m) {
  u64 r = 0;
  const int dm = gf2_degree(m);
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (gf2_degree(a) == dm) a ^= m;
  }
  return r;
}

constexpr unsigned kMaxBinaryDegree = 20;
constexpr u64 kMaxPrime = u64{1} << 31;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                    29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a proven witness set below 3.3e24.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_gf2(u64 modulus) {
  const int deg = gf2_degree(modulus);
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    for (u64 cand = u64{1} << d; cand < (u64{1} << (d + 1)); ++cand) {
      if (gf2_mod(modulus, cand) == 0) return false;
    }
  }
  return true;
}

u64 default_binary_modulus(unsigned e) {
  if (e == 0 || e > kMaxBinaryDegree) {
    throw Error(ErrorCode::kInvalidField,
                "binary extension degree must be in [1, 20]");
  }
  for (u64 m = u64{1} << e; m < (u64{1} << (e + 1)); ++m) {
    if (is_irreducible_gf2(m)) return m;
  }
  throw Error(ErrorCode::kInternal, "no irreducible modulus found");
}

FieldRef Field::make(FieldSpec spec) {
  if (!is_prime_u64(spec.p)) {
    throw Error(ErrorCode::kInvalidField,
                "characteristic " + std::to_string(spec.p) + " is not prime");
  }
  if (spec.e == 0) {
    throw Error(ErrorCode::kInvalidField, "extension degree must be >= 1");
  }
  if (spec.e == 1) {
    if (spec.p >= kMaxPrime) {
      throw Error(ErrorCode::kInvalidField, "prime must be below 2^31");
    }
    spec.modulus = 0;
  } else {
    if (spec.p != 2) {
      throw Error(ErrorCode::kInvalidField,
                  "extension fields are supported only in characteristic 2");
    }
    if (spec.e > kMaxBinaryDegree) {
      throw Error(ErrorCode::kInvalidField,
                  "binary extension degree must be in [1, 20]");
    }
    if (spec.modulus == 0) spec.modulus = default_binary_modulus(spec.e);
    if (gf2_degree(spec.modulus) != static_cast<int>(spec.e) ||
        !is_irreducible_gf2(spec.modulus)) {
      throw Error(ErrorCode::kInvalidField,
                  "modulus " + std::to_string(spec.modulus) +
                      " is not an irreducible polynomial of degree " +
                      std::to_string(spec.e) + " over GF(2)");
    }
  }
  return FieldRef(new Field(spec));
}

Field::Field(FieldSpec spec) : spec_(spec) {
  q_ = 1;
  for (unsigned i = 0; i < spec_.e; ++i) q_ *= spec_.p;
  if (spec_.e == 1) return;

  // Find a generator of the multiplicative group and build exp/log tables.
  const u64 group = q_ - 1;
  exp_.assign(group, 0);
  log_.assign(q_, 0);
  for (u64 g = 2; g < q_; ++g) {
    u64 x = 1;
    u64 order = 0;
    do {
      x = gf2_mulmod(x, g, spec_.modulus);
      ++order;
    } while (x != 1);
    if (order != group) continue;
    x = 1;
    for (u64 i = 0; i < group; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = gf2_mulmod(x, g, spec_.modulus);
    }
    return;
  }
  // GF(2)^* is trivial: q = 2 never reaches here since e > 1.
  exp_[0] = 1;
}

Elem Field::from_int(u64 value) const {
  if (spec_.e == 1) return Elem{static_cast<std::uint32_t>(value % spec_.p)};
  if (value >= q_) {
    throw Error(ErrorCode::kFieldMismatch,
                "encoding " + std::to_string(value) + " is outside GF(" +
                    std::to_string(q_) + ")");
  }
  return Elem{static_cast<std::uint32_t>(value)};
}

Elem Field::from_signed(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(spec_.p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  // In characteristic 2 the prime subfield is {0, 1}.
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::kZeroDivisor, "inverse of zero");
  if (spec_.e == 1) {
    return Elem{static_cast<std::uint32_t>(powmod(a.value, spec_.p - 2, spec_.p))};
  }
  const std::uint32_t l = log_[a.value];
  return Elem{exp_[l == 0 ? 0 : static_cast<std::uint32_t>(q_ - 1 - l)]};
}

Elem Field::pow(Elem a, u64 k) const {
  Elem r = one();
  while (k != 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldRef& a, const FieldRef& b) {
  if (!same_field(a, b)) {
    throw Error(ErrorCode::kFieldMismatch, "operands live in different fields");
  }
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         ArithOp op) {
  require_same_field(a.field, b.field);
  const Field& f = *a.field;
  if (!f.contains(a.elem) || !f.contains(b.elem)) {
    throw Error(ErrorCode::kFieldMismatch, "element outside its field");
  }
  switch (op) {
    case ArithOp::kAdd: return {a.field, f.add(a.elem, b.elem)};
    case ArithOp::kSub: return {a.field, f.sub(a.elem, b.elem)};
    case ArithOp::kMul: return {a.field, f.mul(a.elem, b.elem)};
    case ArithOp::kDiv: return {a.field, f.div(a.elem, b.elem)};
  }
  throw Error(ErrorCode::kInternal, "unknown arithmetic op");
}

}  // namespace kt
