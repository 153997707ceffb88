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

#ifndef KT_FIELD_HPP_
#define KT_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kt {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// A field element in canonical integer form: the residue for prime fields,
// the little-endian bit vector of polynomial-basis coefficients for GF(2^e).
// The derived ordering is the canonical total order on field elements.
struct Elem {
  std::uint32_t value = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// Parameters identifying F_q = GF(p^e). For e > 1 the modulus is encoded as
// an integer whose binary digits are its coefficients (x^4+x+1 -> 19).
struct FieldSpec {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::uint64_t modulus = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Smallest monic irreducible of degree e over GF(2), bit-encoded.
std::uint64_t default_binary_modulus(unsigned e);

// Trial factorization over GF(2).
bool is_irreducible_gf2(std::uint64_t modulus);

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
 public:
  // Validates the spec: p prime, and for e > 1 only p = 2 with a monic
  // irreducible modulus of degree e. A zero modulus selects the default.
  static FieldRef make(FieldSpec spec);
  static FieldRef prime(std::uint64_t p) { return make({p, 1, 0}); }
  static FieldRef binary(unsigned e, std::uint64_t modulus = 0) {
    return make({2, e, modulus});
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t characteristic() const { return spec_.p; }
  unsigned degree() const { return spec_.e; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return spec_.e == 1; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  // Reduces modulo p for prime fields; requires value < q otherwise.
  Elem from_int(std::uint64_t value) const;
  // Image of an integer under Z -> F_q (reduction mod the characteristic).
  Elem from_signed(std::int64_t value) const;
  bool contains(Elem a) const { return a.value < q_; }

  Elem add(Elem a, Elem b) const {
    if (spec_.e > 1) return Elem{a.value ^ b.value};
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Elem{static_cast<std::uint32_t>(s >= spec_.p ? s - spec_.p : s)};
  }
  Elem neg(Elem a) const {
    if (spec_.e > 1 || a.value == 0) return a;
    return Elem{static_cast<std::uint32_t>(spec_.p - a.value)};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (spec_.e == 1) {
      return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value %
                                             spec_.p)};
    }
    if (a.value == 0 || b.value == 0) return Elem{0};
    std::uint32_t l = log_[a.value] + log_[b.value];
    if (l >= q_ - 1) l -= static_cast<std::uint32_t>(q_ - 1);
    return Elem{exp_[l]};
  }
  // Throws ZeroDivisor on a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  std::string to_string(Elem a) const { return std::to_string(a.value); }

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_ == b.spec_;
  }

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldRef& a, const FieldRef& b);
// Throws FieldMismatch unless same_field(a, b).
void require_same_field(const FieldRef& a, const FieldRef& b);

// Element bound to its field; the checked arithmetic surface.
struct FieldElement {
  FieldRef field;
  Elem elem;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field, b.field) && a.elem == b.elem;
  }
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         ArithOp op);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kAdd);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kSub);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kMul);
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kDiv);
}

}  // namespace kt

#endif  // KT_FIELD_HPP_
