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

#ifndef KT_POLY_HPP_
#define KT_POLY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kt/field.hpp"

namespace kt {

// Immutable univariate polynomial over F_q. Coefficient i multiplies x^i;
// trailing zeros are stripped on construction, so the zero polynomial has
// no coefficients.
class Poly {
 public:
  // degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldRef field) : field_(std::move(field)) {}
  Poly(FieldRef field, std::vector<Elem> coeffs);

  static Poly constant(FieldRef field, Elem c);
  static Poly monomial(FieldRef field, Elem c, std::size_t power);
  // (x - y)^k.
  static Poly shifted_power(FieldRef field, Elem y, std::size_t k);
  // Inverse of index(): the base-q digits of `index`, least significant
  // digit as the constant term.
  static Poly from_index(FieldRef field, std::uint64_t index);

  const FieldRef& field() const { return field_; }
  const Field& f() const { return *field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == f().one(); }
  Elem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Elem{0};
  }
  Elem leading() const { return is_zero() ? Elem{0} : coeffs_.back(); }

  // Base-q positional encoding of the coefficient vector.
  std::uint64_t index() const;
  // Coefficients padded with zeros to exactly `len` entries (len >= size).
  std::vector<Elem> padded(std::size_t len) const;

  Poly scaled(Elem c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
  }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  FieldRef field_;
  std::vector<Elem> coeffs_;
};

// Horner evaluation.
Elem poly_eval(const Poly& f, Elem y);
// Checked form; throws FieldMismatch when y is from another field.
FieldElement poly_eval(const Poly& f, const FieldElement& y);

// Formal derivative applied j times.
Poly poly_derivative(const Poly& f, unsigned j);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Euclidean division; throws ZeroDivisor when g = 0.
DivMod poly_divmod(const Poly& f, const Poly& g);
Poly poly_mod(const Poly& f, const Poly& g);

// f^k mod z by square-and-multiply.
Poly poly_modpow(const Poly& f, std::uint64_t k, const Poly& z);

struct ExtGcd {
  Poly gcd;  // monic, or zero when both inputs are zero
  Poly s;
  Poly t;    // s*a + t*b = gcd
};

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

// The unique f with deg f < deg g1 + deg g2, f = r1 mod g1, f = r2 mod g2.
// Throws NonCoprimeModuli when gcd(g1, g2) != 1.
Poly crt_pair(const Poly& r1, const Poly& g1, const Poly& r2, const Poly& g2);

struct HermitePoint {
  Elem node;
  std::vector<Elem> values;  // f^(0)(node), ..., f^(s)(node)
};

// Unique f with deg f < k(s+1) matching the prescribed derivatives at k
// distinct nodes. Taylor expansion at each node, combined by CRT over the
// moduli (x - node)^(s+1). Requires char > k(s+1).
Poly hermite_interpolate(const FieldRef& field,
                         std::span<const HermitePoint> points, unsigned s);

// Distinct-degree test: no factor of degree <= deg/2.
bool is_irreducible(const Poly& f);

// Comma-separated coefficient encodings, constant term first. The zero
// polynomial encodes as the empty string.
std::string to_string(const Poly& f);
Poly parse_poly(const FieldRef& field, std::string_view text);

}  // namespace kt

#endif  // KT_POLY_HPP_
